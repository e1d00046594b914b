"""
Configuration Module.
"""

p = {}

p["version"] = "1.0.0"
p["program"] = "annulus-dyn"

# Configuration file lookup: $ANNULUS_DYN_CONFIG_DIR/annulus-dyn.json unless --config is given.
p["config_dir_env"] = "ANNULUS_DYN_CONFIG_DIR"
p["config_file"] = "annulus-dyn.json"
p["config_suffix"] = ".config.json"

# Default output file per command.
p["output_names"] = {
    "eval": "field.csv",
    "portrait": "portrait.csv",
    "equilibria": "equilibria.json",
    "bifurcation": "bifurcation.json",
    "orbit": "orbit.csv",
}

pdict = p.copy()
