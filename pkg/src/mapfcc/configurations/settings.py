import copy
import logging.config

from .base import Conf
from .descriptors import env

STRATEGIES = ("auto", "bfs", "tree", "expanded", "local", "oracle")
OUTPUT_FORMATS = ("plan", "json-lines", "dot-frames")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class MapfccConf(Conf):
    """
    Settings of the mapfcc command line tool.

    Every setting can be overridden by an environment variable with the
    MAPFCC_ prefix, e.g., MAPFCC_NODE_BUDGET=50000. A NODE_BUDGET of zero
    means no budget.
    """

    env_prefix = "MAPFCC_"

    NODE_BUDGET = env(0, minimum=0)
    STRATEGY = env("auto", choices=STRATEGIES)
    OUTPUT_FORMAT = env("plan", choices=OUTPUT_FORMATS)
    SEED = env(0)
    LOG_LEVEL = env("WARNING", choices=LOG_LEVELS, upper=True)
    TIMING = env(True)

    def get_logging_formatters(self):
        return {"simple": {"format": "%(levelname)s %(name)s: %(message)s"}}

    def get_logging_console_handler(self, log_level):
        return {
            "level": log_level,
            "class": "logging.StreamHandler",
            "formatter": "simple",
            "stream": "ext://sys.stderr",
        }

    def get_logging(self, logging_formatters, logging_console_handler, log_level):
        """
        A dictConfig for the "mapfcc" logger hierarchy.
        """
        return {
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": logging_formatters,
            "handlers": {"console": logging_console_handler},
            "loggers": {
                "mapfcc": {
                    "handlers": ["console"],
                    "level": log_level,
                    "propagate": False,
                }
            },
        }


def configure_logging(conf: Conf, verbose: bool = False):
    """
    Install the LOGGING dictConfig of the given configuration. The verbose
    flag lowers the level to DEBUG.
    """
    settings = conf.load_settings()
    config = copy.deepcopy(settings["LOGGING"])
    if verbose:
        config["handlers"]["console"]["level"] = "DEBUG"
        config["loggers"]["mapfcc"]["level"] = "DEBUG"
    logging.config.dictConfig(config)
    return config
