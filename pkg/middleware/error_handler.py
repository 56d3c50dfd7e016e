from flask import jsonify
from marshmallow import ValidationError
from werkzeug.exceptions import HTTPException
import logging

from utils.exceptions import ApproximationError, ExportError, InvalidInputError

logger = logging.getLogger(__name__)

def register_error_handlers(app):
    
    @app.errorhandler(400)
    def bad_request(error):
        return jsonify({'error': 'Bad request'}), 400
    
    @app.errorhandler(404)
    def not_found(error):
        return jsonify({'error': 'Resource not found'}), 404
    
    @app.errorhandler(405)
    def method_not_allowed(error):
        return jsonify({'error': 'Method not allowed'}), 405
    
    @app.errorhandler(500)
    def internal_error(error):
        logger.error(f"Internal server error: {str(error)}")
        return jsonify({'error': 'Internal server error'}), 500
    
    @app.errorhandler(ValidationError)
    def validation_error(e):
        return jsonify({'error': 'Invalid request', 'details': e.messages}), 422
    
    @app.errorhandler(InvalidInputError)
    def invalid_input(e):
        return jsonify({'error': str(e)}), 400
    
    @app.errorhandler(ExportError)
    def export_error(e):
        logger.error(f"Export error: {str(e)}")
        return jsonify({'error': str(e)}), 500
    
    @app.errorhandler(ApproximationError)
    def approximation_error(e):
        logger.error(f"Approximation error: {str(e)}")
        return jsonify({'error': str(e)}), 422
    
    @app.errorhandler(Exception)
    def handle_exception(e):
        if isinstance(e, HTTPException):
            return jsonify({'error': e.description}), e.code
        logger.error(f"Unhandled exception: {str(e)}")
        return jsonify({'error': 'Internal server error'}), 500
