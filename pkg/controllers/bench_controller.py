from flask import current_app, jsonify, request
from marshmallow import ValidationError
import logging
import os

from models.schemas import ComplexMapRequestSchema, ConvergeRequestSchema
from repositories.result_repository import ResultRepository
from services.convergence_service import ConvergenceService
from utils.exceptions import ApproximationError, ExportError, InvalidInputError

logger = logging.getLogger(__name__)


class BenchController:
    """Controller for convergence sweeps and complex error maps"""

    def __init__(self):
        self.repository = ResultRepository()

    @staticmethod
    def _output_path(name):
        # Results are only ever written inside the output folder
        return os.path.join(current_app.config['OUTPUT_FOLDER'], os.path.basename(name))

    def converge(self):
        """Run a convergence sweep endpoint"""
        try:
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'error': 'No data provided'}), 400

            params = ConvergeRequestSchema().load(data)
            service = ConvergenceService(grid_size=params['grid'], max_workers=params['workers'])
            curves = service.run_convergence(params['function'], params['configs'], params['n_values'])

            response = {
                'function': params['function'],
                'curves': [curve.to_dict() for curve in curves],
            }
            if params['out']:
                path = self._output_path(params['out'])
                files = [self.repository.save(curves, path)]
                if params['plot_data']:
                    files.append(self.repository.save_plot_data(curves, path))
                files.append(self.repository.save_metadata(path, {
                    'command': 'converge',
                    'function': params['function'],
                    'methods': [config.to_dict() for config in params['configs']],
                    'n_values': params['n_values'],
                    'grid_size': params['grid'],
                }))
                response['files'] = files

            return jsonify(response), 200

        except ValidationError as e:
            return jsonify({'error': 'Invalid request', 'details': e.messages}), 422
        except InvalidInputError as e:
            return jsonify({'error': str(e)}), 400
        except ExportError as e:
            logger.error(f"Export error: {str(e)}")
            return jsonify({'error': str(e)}), 500
        except Exception as e:
            logger.error(f"Convergence error: {str(e)}")
            return jsonify({'error': 'Internal server error'}), 500

    def complex_map(self):
        """Complex-plane error map endpoint"""
        try:
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'error': 'No data provided'}), 400

            params = ComplexMapRequestSchema().load(data)
            error_map = ConvergenceService().run_complex_map(
                params['function'], params['n'], box=params['box'], resolution=params['res'],
                tol=params['tol'], im_tol=params['im_tol'])

            response = error_map.to_dict()
            if params['out']:
                response['files'] = self.repository.save_map(error_map, self._output_path(params['out']))
            return jsonify(response), 200

        except ValidationError as e:
            return jsonify({'error': 'Invalid request', 'details': e.messages}), 422
        except InvalidInputError as e:
            return jsonify({'error': str(e)}), 400
        except ApproximationError as e:
            logger.error(f"Complex map error: {str(e)}")
            return jsonify({'error': str(e)}), 422
        except Exception as e:
            logger.error(f"Complex map error: {str(e)}")
            return jsonify({'error': 'Internal server error'}), 500
