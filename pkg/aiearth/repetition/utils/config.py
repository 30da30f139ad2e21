import os

import yaml
from easydict import EasyDict

from ..exception import ConfigException
from ..vars import CONFIG_BASE_DIR, DEFAULT_CFG, DEFAULT_PROFILE


def list_profiles():
    files = os.listdir(CONFIG_BASE_DIR)
    return sorted(os.path.splitext(f)[0] for f in files if f.endswith(".yaml"))


def merge_default_value(cfg, defaults=None):
    defaults = DEFAULT_CFG if defaults is None else defaults
    for k, v in defaults.items():
        # trans "a.b.c" = 1 to cfg["a"]["b"]["c"] = 1
        sub_keys = k.split(".")
        base_cfg = cfg
        for sub_key in sub_keys[:-1]:
            if sub_key not in base_cfg or base_cfg[sub_key] is None:
                base_cfg[sub_key] = EasyDict()
            base_cfg = base_cfg[sub_key]
        if sub_keys[-1] not in base_cfg:
            base_cfg[sub_keys[-1]] = v
    return cfg


def load_profile(name_or_path=None):
    name_or_path = name_or_path or DEFAULT_PROFILE
    if os.path.isfile(name_or_path):
        path = name_or_path
    else:
        path = os.path.join(CONFIG_BASE_DIR, name_or_path + ".yaml")
        if not os.path.isfile(path):
            raise ConfigException(
                "unknown profile %s, choose from %s" % (name_or_path, list_profiles())
            )
    with open(path, encoding="utf-8") as f:
        try:
            cfg = yaml.load(f, Loader=yaml.Loader)
        except yaml.YAMLError as e:
            raise ConfigException("cannot parse %s: %s" % (path, e))
    if not isinstance(cfg, dict):
        raise ConfigException("profile %s must be a mapping" % path)
    cfg = EasyDict(cfg)
    if "profile" not in cfg:
        cfg.profile = os.path.splitext(os.path.basename(path))[0]
    return merge_default_value(cfg)
