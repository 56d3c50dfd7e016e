from flask import current_app, jsonify, request
from marshmallow import ValidationError
import logging
import os

import numpy as np

from models.approximant import BarycentricRational
from models.bench import METHOD_AAA
from models.schemas import FitRequestSchema
from repositories.approximant_repository import ApproximantRepository
from services.convergence_service import fit_method
from services.rational_service import RationalService
from services.test_function_service import TestFunctionService
from utils.exceptions import ApproximationError, ExportError, InvalidInputError
from utils.helpers import as_complex_vector, complex_to_pairs, equispaced_grid

logger = logging.getLogger(__name__)


class FitController:

    def __init__(self):
        self.schema = FitRequestSchema()

    def list_functions(self):
        """List the test functions endpoint"""
        functions = [f.to_dict() for f in TestFunctionService.list_functions()]
        return jsonify({'functions': functions, 'total': len(functions)}), 200

    def fit(self):
        """Fit one method to equispaced samples endpoint"""
        try:
            data = request.get_json(silent=True)
            if not data:
                return jsonify({'error': 'No data provided'}), 400

            params = self.schema.load(data)
            if params['samples'] is not None:
                F = as_complex_vector(params['samples'])
            else:
                F = TestFunctionService.sample(params['function'], params['n'])
            X = equispaced_grid(F.size)

            result = fit_method(params['config'], X, F)
            response = {
                'method': params['method'],
                'n': int(F.size),
                'degree': result.degree,
                'is_interpolant': result.is_interpolant,
                'rescue_applied': result.rescue_applied,
                'fit': result.fit.to_dict(),
            }

            if params['method'] == METHOD_AAA:
                response['report'] = result.report.to_dict()
                poles = RationalService.approximant_poles(result.fit)
                response['poles'] = complex_to_pairs(poles)
                if result.fit.variant == BarycentricRational.variant:
                    response['zeros'] = complex_to_pairs(RationalService.zeros(result.fit))
                response['residues'] = complex_to_pairs(RationalService.approximant_residues(result.fit, poles))

            if params['save']:
                if params['method'] != METHOD_AAA:
                    raise InvalidInputError('Only AAA fits can be saved')
                path = os.path.join(current_app.config['OUTPUT_FOLDER'], os.path.basename(params['save']))
                response['files'] = [ApproximantRepository(tol=params['tol']).save(result.fit, path)]

            if params['points']:
                points = as_complex_vector(params['points'])
                if params['method'] != METHOD_AAA and np.iscomplexobj(points):
                    raise InvalidInputError('Only AAA fits can be evaluated off the real line')
                response['values'] = complex_to_pairs(result.evaluator(points))

            if params['function'] is not None:
                response['error'] = TestFunctionService.max_dense_error(result.evaluator, params['function'])

            return jsonify(response), 200

        except ValidationError as e:
            return jsonify({'error': 'Invalid request', 'details': e.messages}), 422
        except InvalidInputError as e:
            return jsonify({'error': str(e)}), 400
        except ExportError as e:
            logger.error(f"Export error: {str(e)}")
            return jsonify({'error': str(e)}), 500
        except ApproximationError as e:
            logger.error(f"Fit error: {str(e)}")
            return jsonify({'error': str(e)}), 422
        except Exception as e:
            logger.error(f"Fit error: {str(e)}")
            return jsonify({'error': 'Internal server error'}), 500
