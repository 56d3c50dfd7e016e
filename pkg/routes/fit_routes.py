from flask import Blueprint
from controllers.fit_controller import FitController

fit_bp = Blueprint('fit', __name__)
fit_controller = FitController()

@fit_bp.route('/functions', methods=['GET'])
def list_functions():
    """List the available test functions"""
    return fit_controller.list_functions()

@fit_bp.route('/fit', methods=['POST'])
def fit():
    """Fit one method to samples or to a test function"""
    return fit_controller.fit()
