from flask import Blueprint
from controllers.bench_controller import BenchController

bench_bp = Blueprint('bench', __name__)
bench_controller = BenchController()

@bench_bp.route('/converge', methods=['POST'])
def converge():
    """Convergence sweep over n for a set of methods"""
    return bench_controller.converge()

@bench_bp.route('/cmap', methods=['POST'])
def complex_map():
    """Error map of the AAA fit over a box in the complex plane"""
    return bench_controller.complex_map()
