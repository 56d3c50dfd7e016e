from flask import Flask
from flask.cli import FlaskGroup
from dotenv import load_dotenv
import os

# Load environment variables
load_dotenv()

def create_app(config_class=None):
    app = Flask(__name__)
    
    # Load configuration
    from config.config import Config
    app.config.from_object(config_class or Config)
    
    # Create output directory
    os.makedirs(app.config['OUTPUT_FOLDER'], exist_ok=True)
    
    # Register blueprints
    from routes.fit_routes import fit_bp
    from routes.bench_routes import bench_bp
    from routes.bench_commands import bench_cli
    
    app.register_blueprint(fit_bp, url_prefix='/api')
    app.register_blueprint(bench_bp, url_prefix='/api')
    app.register_blueprint(bench_cli)
    
    # Error handlers
    from middleware.error_handler import register_error_handlers
    register_error_handlers(app)
    
    # Setup logging
    from utils.logger import setup_logger
    setup_logger(level=app.config['LOG_LEVEL'], log_file=app.config['LOG_FILE'])
    
    @app.route('/')
    def index():
        return {
            'message': 'Equispaced Rational Approximation API',
            'version': '1.0.0',
            'endpoints': {
                'functions': '/api/functions',
                'fit': '/api/fit',
                'converge': '/api/converge',
                'cmap': '/api/cmap'
            },
            'commands': ['converge', 'cmap', 'profile', 'seedcheck']
        }
    
    @app.route('/health')
    def health():
        return {'status': 'healthy'}
    
    return app

cli = FlaskGroup(create_app=create_app)

if __name__ == '__main__':
    cli()
