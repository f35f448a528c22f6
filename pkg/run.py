import os

from relgap import create_app

if __name__ == '__main__':
    app = create_app(config_name=os.getenv('RELGAP_ENV', 'default'))
    app(prog_name='relgap')
