"""Configuration management for credalkit."""
import os
from pathlib import Path

from dotenv import load_dotenv

# Base directory
BASE_DIR = Path(__file__).parent

load_dotenv(BASE_DIR / '.env')


def _flag(name, default='false'):
    return os.environ.get(name, default).strip().lower() in ('1', 'true', 'yes', 'on')


class Config:
    """Base configuration class."""
    # Engine defaults; command-line flags override these
    DEFAULT_MODE = os.environ.get('CREDALKIT_MODE', 'strict')
    DEFAULT_SEED = int(os.environ.get('CREDALKIT_SEED', '20200401'))
    DEFAULT_FORMAT = os.environ.get('CREDALKIT_FORMAT', 'text')
    SAMPLE_ACTS = int(os.environ.get('CREDALKIT_SAMPLE_ACTS', '0'))

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
    LOG_TO_FILE = _flag('LOG_TO_FILE')
    LOG_FORMAT = '[%(asctime)s] [%(levelname)s] %(message)s'
    LOG_DATE_FORMAT = '%Y-%m-%d %H:%M:%S'
    LOG_BACKUP_DAYS = 7

    # Directories
    FIXTURES_DIR = BASE_DIR / 'fixtures'
    LOGS_DIR = Path(os.environ.get('LOGS_DIR', BASE_DIR / 'logs'))


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO')


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration."""
    TESTING = True
    DEBUG = False
    DEFAULT_MODE = 'strict'
    DEFAULT_SEED = 20200401
    DEFAULT_FORMAT = 'text'
    SAMPLE_ACTS = 0
    LOG_TO_FILE = False


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}
