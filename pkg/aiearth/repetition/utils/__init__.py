from .logger import get_logger, set_log_level
from .config import load_profile, list_profiles, merge_default_value
from .misc import fix_random_seeds
