
import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    CERTIFICATE_LIMIT = int(os.getenv('RELGAP_CERTIFICATE_LIMIT', 10_000_000))
    ORDER_BOUND = int(os.getenv('RELGAP_ORDER_BOUND', 100))
    SEARCH_MAX = int(os.getenv('RELGAP_SEARCH_MAX', 12))
    JSON_INDENT = int(os.getenv('RELGAP_JSON_INDENT', 2))
    LOG_LEVEL = os.getenv('RELGAP_LOG_LEVEL', 'WARNING')
    TESTING = False

class DevelopmentConfig(Config):
    LOG_LEVEL = os.getenv('RELGAP_LOG_LEVEL', 'INFO')

class ProductionConfig(Config):
    pass

class TestingConfig(Config):
    TESTING = True
    CERTIFICATE_LIMIT = int(os.getenv('RELGAP_TEST_CERTIFICATE_LIMIT', 1_000_000))

config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}
