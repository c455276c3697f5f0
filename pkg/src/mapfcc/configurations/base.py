import inspect
import logging

from .descriptors import Env, EnvDescriptor
from ..exceptions import ImproperlyConfigured

log = logging.getLogger("mapfcc.configurations")


class Conf:
    """
    Base class for configuration classes.

    Upper case attributes are settings. A setting is a plain value, an
    :func:`env` descriptor or the result of a ``get_<name>`` method. The
    arguments of a getter are lower case names of other settings and receive
    their values, so derived settings are computed after their dependencies.

    Keyword arguments of the constructor override settings by name.
    """

    env_prefix = ""

    def __init__(self, **overrides):
        self._settings = None
        self.env = Env()

        cls = type(self)
        for name, value in overrides.items():
            attr = name.upper()
            declared = getattr(cls, attr, None)
            if isinstance(declared, EnvDescriptor):
                value = declared.clean(value)
            elif not hasattr(cls, attr) and not hasattr(cls, f"get_{name.lower()}"):
                raise TypeError(f"invalid argument: {attr}")
            setattr(self, attr, value)

    @classmethod
    def setting_names(cls):
        names = set()
        for attr in dir(cls):
            if attr.startswith("get_"):
                names.add(attr[4:].upper())
            elif attr.isupper() and not attr.startswith("_"):
                names.add(attr)
        return sorted(names)

    def finalize(self, settings):
        """
        A hook that receives the settings dictionary and returns the final
        output of :meth:`load_settings`.
        """
        return settings

    def load_settings(self) -> dict:
        """
        Return a dictionary with all settings, computed once and cached.

        Raises:
            ImproperlyConfigured:
                If an environment variable cannot be cast or a value is out of
                range.
        """
        if self._settings is None:
            try:
                settings = {name: getattr(self, name) for name in self.setting_names()}
            except ValueError as exc:
                log.error("invalid configuration: %s", exc)
                raise ImproperlyConfigured(str(exc)) from exc
            self._settings = self.finalize(settings)
        return dict(self._settings)

    def __getattr__(self, attr):
        # Only reached for settings computed by getters that were not cached yet
        if not attr.isupper():
            raise AttributeError(attr)
        getter = getattr(type(self), f"get_{attr.lower()}", None)
        if getter is None:
            raise AttributeError(f"invalid setting: {attr}")
        value = self._call_getter(getter)
        setattr(self, attr, value)
        return value

    def _call_getter(self, getter):
        params = list(inspect.signature(getter).parameters.values())[1:]
        kwargs = {}
        for param in params:
            try:
                kwargs[param.name] = getattr(self, param.name.upper())
            except AttributeError:
                if param.default is param.empty:
                    msg = f"{getter.__name__}: missing setting {param.name.upper()}"
                    raise TypeError(msg) from None
                kwargs[param.name] = param.default
        return getter(self, **kwargs)
