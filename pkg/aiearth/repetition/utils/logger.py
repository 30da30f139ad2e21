import logging

FORMAT = "%(asctime)s-%(name)s-%(levelname)s-%(message)s"

_initialized = set()


def get_logger(name, log_file=None, log_level=None):
    """
    Get a logger under the ``aiearth.repetition`` hierarchy.

    Handlers are attached once per name; later calls only adjust the level.
    """
    if not name.startswith("aiearth.repetition"):
        name = "aiearth.repetition." + name
    logger = logging.getLogger(name)
    if log_level is not None:
        logger.setLevel(log_level)
    if name in _initialized:
        return logger

    root = logging.getLogger("aiearth.repetition")
    if not root.handlers:
        formatter = logging.Formatter(FORMAT)
        ls = logging.StreamHandler()
        ls.setFormatter(formatter)
        root.addHandler(ls)
    if log_file is not None:
        add_file_handler(log_file)
    _initialized.add(name)
    return logger


def add_file_handler(log_file):
    root = logging.getLogger("aiearth.repetition")
    lf = logging.FileHandler(filename=log_file, encoding="utf8")
    lf.setFormatter(logging.Formatter(FORMAT))
    root.addHandler(lf)
    return lf


def set_log_level(level, log_file=None):
    root = logging.getLogger("aiearth.repetition")
    root.setLevel(level.upper() if isinstance(level, str) else level)
    if log_file is not None:
        add_file_handler(log_file)
    return root
