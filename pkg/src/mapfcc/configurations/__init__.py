from .descriptors import Env, EnvDescriptor, env
from .base import Conf
from .settings import LOG_LEVELS, OUTPUT_FORMATS, STRATEGIES, MapfccConf, configure_logging
