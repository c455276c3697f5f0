"""
Settings that environment variables can override.
"""
import environ

from ..exceptions import ImproperlyConfigured

CASTS = {bool: "bool", int: "int", float: "float", str: "str"}


def env(default, choices=None, minimum=None, upper=False):
    """
    Declare a setting that can be overridden by an environment variable.

    Usage:
        Used in class declarations:

        class Conf:
            env_prefix = "MAPFCC_"
            NODE_BUDGET = env(0, minimum=0)

        Conf instances now have a NODE_BUDGET attribute that reads the
        MAPFCC_NODE_BUDGET variable and falls back to 0.

    Args:
        default:
            Value used when the variable is not set. Its type (bool, int,
            float or str) is the type of the setting.
        choices:
            Allowed values, compared after normalization.
        minimum:
            Smallest allowed value of a numeric setting.
        upper:
            Store string values in upper case.
    """
    return EnvDescriptor(default, choices=choices, minimum=minimum, upper=upper)


class EnvDescriptor:
    def __init__(self, default, choices=None, minimum=None, upper=False):
        if type(default) not in CASTS:
            raise TypeError(f"unsupported setting type: {type(default).__name__}")
        self.default = default
        self.type = type(default)
        self.choices = None if choices is None else tuple(choices)
        self.minimum = minimum
        self.upper = upper
        self.attr = self.name = None

    def __set_name__(self, owner, attr):
        self.attr = attr
        self.name = getattr(owner, "env_prefix", "") + attr

    def __get__(self, conf, cls=None):
        if conf is None:
            return self
        value = self.clean(conf.env.read(self.name, self.default))
        setattr(conf, self.attr, value)
        return value

    def clean(self, value):
        """
        Normalize a value and check it against the declared constraints.

        Raises:
            ImproperlyConfigured
        """
        if self.upper and isinstance(value, str):
            value = value.upper()
        if self.choices is not None and value not in self.choices:
            label = self.attr.lower().replace("_", " ")
            raise ImproperlyConfigured(f"invalid {label}: {value}")
        if self.minimum is not None and value < self.minimum:
            raise ImproperlyConfigured(f"{self.attr} must be at least {self.minimum}")
        return value


class Env(environ.Env):
    """
    An :class:`environ.Env` whose lookups cast to the type of the default.
    """

    def read(self, name, default):
        method = getattr(self, CASTS[type(default)])
        return method(name, default=default)
