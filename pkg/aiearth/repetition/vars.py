import os


CONFIG_BASE_DIR = os.path.join(os.path.dirname(__file__), "configs")
DEFAULT_PROFILE = "desk"

DEFAULT_CFG = {
    "seed": 0,
    "threads": 1,
    "word.node_budget": 10**8,
    "search.node_budget": 10**9,
    "search.progress_interval": 10**7,
    "search.confirm_next": False,
}
