import logging
import os

from dotenv import load_dotenv

logger = logging.getLogger(__name__)

load_dotenv()

ENV_PREFIX = 'FRONTSEEK_'

OUTPUT_DIR_ENV = f'{ENV_PREFIX}OUTPUT_DIR'
CACHE_DIR_ENV = f'{ENV_PREFIX}CACHE_DIR'
LOG_LEVEL_ENV = f'{ENV_PREFIX}LOG_LEVEL'
CI_RUN_ENV = f'{ENV_PREFIX}CI_RUN'

DEFAULT_OUTPUT_DIR = 'frontseek-results'
DEFAULT_CACHE_DIR = os.path.join('~', '.cache', 'frontseek')

# logging
DEFAULT_LOGGING_LEVEL = 'INFO'
DEFAULT_LOGGING_CONFIG = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'basic': {
            'class': 'logging.Formatter',
            'format': '%(asctime)s  %(name)-30s  %(levelname)8s  ::  %(message)s',
            'datefmt': '%Y-%m-%d %H:%M:%S',
        }
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'basic',
            'stream': 'ext://sys.stderr',
        }
    },
    'root': {'level': DEFAULT_LOGGING_LEVEL, 'handlers': ['console']},
}


def get_output_dir() -> str:
    return os.environ.get(OUTPUT_DIR_ENV, DEFAULT_OUTPUT_DIR)


def get_cache_dir() -> str:
    return os.path.expanduser(os.environ.get(CACHE_DIR_ENV, DEFAULT_CACHE_DIR))


def get_log_level() -> str:
    return os.environ.get(LOG_LEVEL_ENV, DEFAULT_LOGGING_LEVEL).upper()


def is_ci_run() -> bool:
    return CI_RUN_ENV in os.environ
