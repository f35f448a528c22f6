import logging
import sys

from relgap.config import config
from relgap.cli.commands import cli, init_commands

# Exponents and c_n run past the default 4300-digit int<->str limit
if hasattr(sys, 'set_int_max_str_digits'):
    sys.set_int_max_str_digits(0)


def create_app(config_name='default'):
    app_config = config[config_name]
    # Logs go to stderr so JSON on stdout stays parseable
    logging.basicConfig(
        level=app_config.LOG_LEVEL,
        stream=sys.stderr,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s'
    )
    # Initialize commands with configuration
    init_commands(app_config)
    cli.config = app_config

    return cli
