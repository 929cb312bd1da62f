import logging

from tqdm import tqdm

_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(verbosity=0, stream=None):
    """Attach a single stream handler to the ``concatprover`` logger.

    ``verbosity`` 0 selects WARNING, 1 INFO and 2 or more DEBUG. Calling it again replaces the handler.
    """
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    root = logging.getLogger("concatprover")
    for handler in list(root.handlers):
        if getattr(handler, "_concatprover", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(_FORMAT))
    handler._concatprover = True
    root.addHandler(handler)
    root.setLevel(level)
    return root


def progress(iterable, enabled=True, total=None, desc=None):
    """Wrap ``iterable`` in a tqdm bar when ``enabled``."""
    if not enabled:
        return iterable
    return tqdm(iterable, total=total, desc=desc, leave=False)
