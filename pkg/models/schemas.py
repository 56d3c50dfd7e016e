# Request validation schemas
from marshmallow import Schema, ValidationError, fields, post_load, validate, validates, validates_schema

from config.config import Config
from models.bench import METHODS, PANEL_METHODS, MethodConfig
from services.convergence_service import ConvergenceService
from services.test_function_service import TestFunctionService


def _known_function(identifier):
    try:
        TestFunctionService.get(identifier)
    except ValueError as e:
        raise ValidationError(str(e))


class MethodConfigSchema(Schema):
    """Per-method parameters; loads straight into a MethodConfig"""
    method = fields.String(required=True, validate=validate.OneOf(METHODS))
    gamma = fields.Float(load_default=Config.OVERSAMPLING_RATIO, validate=validate.Range(min=1, min_inclusive=False))
    T = fields.Float(load_default=Config.EXTENSION_HALF_WIDTH, validate=validate.Range(min=1, min_inclusive=False))
    tol = fields.Float(load_default=Config.AAA_TOLERANCE,
                       validate=validate.Range(min=0, max=1, min_inclusive=False, max_inclusive=False))
    im_tol = fields.Float(load_default=Config.BAD_POLE_IM_TOL, validate=validate.Range(min=0))
    mmax = fields.Integer(load_default=Config.AAA_MMAX, validate=validate.Range(min=1))

    @post_load
    def make_config(self, data, **kwargs):
        return MethodConfig(**data)


def _method_config(method, data) -> MethodConfig:
    return MethodConfigSchema().load({
        'method': method,
        **{name: data[name] for name in ('gamma', 'T', 'tol', 'im_tol', 'mmax')},
    })


class ConvergeRequestSchema(Schema):
    """A sweep over n for one test function and a set of methods"""
    function = fields.String(required=True, validate=_known_function)
    methods = fields.List(fields.String(validate=validate.OneOf(METHODS)),
                          load_default=lambda: list(PANEL_METHODS), validate=validate.Length(min=1))
    n_values = fields.List(fields.Integer(validate=validate.Range(min=4)), load_default=None)
    nmin = fields.Integer(load_default=Config.DEFAULT_NMIN, validate=validate.Range(min=4))
    nmax = fields.Integer(load_default=None, validate=validate.Range(min=4))
    nstep = fields.Integer(load_default=Config.DEFAULT_NSTEP, validate=validate.Range(min=1))
    grid = fields.Integer(load_default=Config.DENSE_GRID_SIZE, validate=validate.Range(min=2))
    gamma = fields.Float(load_default=Config.OVERSAMPLING_RATIO, validate=validate.Range(min=1, min_inclusive=False))
    T = fields.Float(load_default=Config.EXTENSION_HALF_WIDTH, validate=validate.Range(min=1, min_inclusive=False))
    tol = fields.Float(load_default=Config.AAA_TOLERANCE,
                       validate=validate.Range(min=0, max=1, min_inclusive=False, max_inclusive=False))
    im_tol = fields.Float(load_default=Config.BAD_POLE_IM_TOL, validate=validate.Range(min=0))
    mmax = fields.Integer(load_default=Config.AAA_MMAX, validate=validate.Range(min=1))
    workers = fields.Integer(load_default=Config.MAX_WORKERS, validate=validate.Range(min=1))
    out = fields.String(load_default=None)
    plot_data = fields.Boolean(load_default=False)

    @validates('n_values')
    def validate_n_values(self, value, **kwargs):
        if value is not None:
            if not value:
                raise ValidationError('n_values must not be empty')
            if any(b <= a for a, b in zip(value, value[1:])):
                raise ValidationError('n_values must be strictly increasing')

    @validates_schema
    def validate_range(self, data, **kwargs):
        if data.get('nmax') is not None and data['nmax'] < data['nmin']:
            raise ValidationError('nmax must be at least nmin', field_name='nmax')

    @post_load
    def resolve(self, data, **kwargs):
        if data['n_values'] is None:
            data['n_values'] = ConvergenceService.default_n_values(
                data['function'], nmin=data['nmin'], nmax=data['nmax'], nstep=data['nstep'])
        data['configs'] = [_method_config(method, data) for method in data['methods']]
        return data


class ComplexMapRequestSchema(Schema):
    function = fields.String(required=True, validate=_known_function)
    n = fields.Integer(required=True, validate=validate.Range(min=2))
    box = fields.List(fields.Float(), load_default=lambda: [-2.0, 2.0, -2.0, 2.0],
                      validate=validate.Length(equal=4))
    res = fields.Integer(load_default=201, validate=validate.Range(min=2))
    tol = fields.Float(load_default=Config.AAA_TOLERANCE,
                       validate=validate.Range(min=0, max=1, min_inclusive=False, max_inclusive=False))
    im_tol = fields.Float(load_default=Config.BAD_POLE_IM_TOL, validate=validate.Range(min=0))
    out = fields.String(load_default=None)

    @validates('box')
    def validate_box(self, value, **kwargs):
        re0, re1, im0, im1 = value
        if not (re0 < re1 and im0 < im1):
            raise ValidationError('box must be re0 < re1, im0 < im1')


class FitRequestSchema(Schema):
    """Fit one method to samples given directly or drawn from a test function"""
    method = fields.String(load_default='aaa', validate=validate.OneOf(METHODS))
    function = fields.String(load_default=None, validate=_known_function)
    n = fields.Integer(load_default=None, validate=validate.Range(min=2))
    samples = fields.List(fields.Raw(), load_default=None)
    gamma = fields.Float(load_default=Config.OVERSAMPLING_RATIO, validate=validate.Range(min=1, min_inclusive=False))
    T = fields.Float(load_default=Config.EXTENSION_HALF_WIDTH, validate=validate.Range(min=1, min_inclusive=False))
    tol = fields.Float(load_default=Config.AAA_TOLERANCE,
                       validate=validate.Range(min=0, max=1, min_inclusive=False, max_inclusive=False))
    im_tol = fields.Float(load_default=Config.BAD_POLE_IM_TOL, validate=validate.Range(min=0))
    mmax = fields.Integer(load_default=Config.AAA_MMAX, validate=validate.Range(min=1))
    points = fields.List(fields.Raw(), load_default=list)
    save = fields.String(load_default=None)

    @validates_schema
    def validate_source(self, data, **kwargs):
        from_function = data.get('function') is not None
        if from_function == (data.get('samples') is not None):
            raise ValidationError('Give either samples or function and n')
        if from_function and data.get('n') is None:
            raise ValidationError('n is required with function', field_name='n')

    @post_load
    def make_config(self, data, **kwargs):
        data['config'] = _method_config(data['method'], data)
        return data
