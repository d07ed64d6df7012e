# -*- coding: utf-8 -*-
from __future__ import with_statement, print_function, absolute_import

import json
import logging
import os

from cyclepatterns.exceptions import InvalidInput

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"

DEFAULTS = {
    "max_n": 10,
    "max_cycle": 11,
    "order": 12,
    "jobs": 1,
}


class Config(object):
    """
    Resource caps and defaults.

    Each setting is taken from the first of: the explicit argument, the
    JSON config file, the environment (CYCLEPATTERNS_MAX_N,
    CYCLEPATTERNS_MAX_CYCLE, CYCLEPATTERNS_ORDER, CYCLEPATTERNS_JOBS) and
    the built-in default.
    """

    def __init__(self, max_n=None, max_cycle=None, order=None, jobs=None, config_file=None, environ=None):
        environ = os.environ if environ is None else environ
        from_file = load_config_file(config_file) if config_file else {}
        explicit = {"max_n": max_n, "max_cycle": max_cycle, "order": order, "jobs": jobs}
        for name, default in DEFAULTS.items():
            value = explicit[name]
            if value is None:
                value = from_file.get(name)
            if value is None:
                value = environ.get("CYCLEPATTERNS_" + name.upper())
            if value is None:
                value = default
            setattr(self, name, _positive_int(name, value))

    def as_dict(self):
        return dict((name, getattr(self, name)) for name in DEFAULTS)

    def __repr__(self):
        return "<Config %s>" % ", ".join("%s=%d" % item for item in sorted(self.as_dict().items()))


def load_config_file(path):
    """
    Read a JSON object of settings; unknown keys are rejected.

    :path: path of the JSON file
    """
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (IOError, OSError, ValueError) as e:
        raise InvalidInput("cannot read config file %s: %s" % (path, e))
    if not isinstance(data, dict):
        raise InvalidInput("config file %s must hold a JSON object" % path)
    unknown = sorted(set(data) - set(DEFAULTS))
    if unknown:
        raise InvalidInput("unknown config keys in %s: %s" % (path, ", ".join(unknown)))
    return data


def _positive_int(name, value):
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise InvalidInput("setting %s must be an integer, got %r" % (name, value))
    if value < 1 and name != "max_n":
        raise InvalidInput("setting %s must be positive, got %d" % (name, value))
    if value < 0:
        raise InvalidInput("setting %s must not be negative, got %d" % (name, value))
    return value


def setup_logging(quiet=False, verbose=False):
    """Configure the root logger for command-line use; progress goes to stderr"""
    level = logging.INFO
    if quiet:
        level = logging.WARNING
    elif verbose:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)
