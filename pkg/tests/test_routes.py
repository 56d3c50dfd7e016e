import os

from repositories.approximant_repository import ApproximantRepository


class TestIndexRoutes:

    def test_index(self, client):
        """Index lists the API endpoints"""
        response = client.get('/')
        assert response.status_code == 200
        assert response.json['endpoints']['fit'] == '/api/fit'

    def test_health(self, client):
        """Health check"""
        assert client.get('/health').json == {'status': 'healthy'}

    def test_not_found(self, client):
        """Unknown URLs return a JSON 404"""
        response = client.get('/api/nothing')
        assert response.status_code == 404
        assert 'error' in response.json


class TestFitRoutes:

    def test_list_functions(self, client):
        """All nine test functions are listed"""
        response = client.get('/api/functions')
        assert response.status_code == 200
        assert response.json['total'] == 9
        assert {'id': 'fA', 'label': 'sqrt(1.21 - x^2)'} in response.json['functions']

    def test_fit_test_function(self, client):
        """AAA fit of exp(x)/sqrt(1 + 9x^2) with poles, residues and error"""
        response = client.post('/api/fit', json={'function': 'fig1', 'n': 50})
        assert response.status_code == 200
        body = response.json
        assert 16 <= body['degree'] <= 18
        assert len(body['poles']) == len(body['residues'])
        assert body['error'] <= 5e-13
        assert body['rescue_applied'] is False

    def test_fit_samples(self, client):
        """A spline through given samples, evaluated at requested points"""
        response = client.post('/api/fit', json={'method': 'spline', 'samples': [0, 1, 4, 9, 16],
                                                 'points': [0.0, 0.25]})
        assert response.status_code == 200
        assert response.json['degree'] == 3
        assert len(response.json['values']) == 2

    def test_fit_complex_points(self, client):
        """AAA fits can be evaluated off the real axis"""
        response = client.post('/api/fit', json={'function': 'fC', 'n': 80, 'points': [[0.0, 0.1]]})
        assert response.status_code == 200
        re, im = response.json['values'][0]
        assert abs(re) < 1e-6
        assert abs(im - 0.5463024898437905) < 1e-6

    def test_fit_saves_approximant(self, app, client):
        """save writes the AAA fit into the output folder, loadable at the same degree"""
        response = client.post('/api/fit', json={'function': 'fig1', 'n': 50, 'save': '../fig1.txt'})
        assert response.status_code == 200
        path = os.path.join(app.config['OUTPUT_FOLDER'], 'fig1.txt')
        assert response.json['files'] == [path]
        loaded = ApproximantRepository().load(path)
        assert loaded.degree == response.json['degree']

    def test_save_needs_aaa(self, client):
        """Only AAA fits have a file format"""
        response = client.post('/api/fit', json={'method': 'spline', 'function': 'fA', 'n': 10, 'save': 'x.txt'})
        assert response.status_code == 400

    def test_needs_exactly_one_source(self, client):
        """Samples and a test function cannot both be given"""
        response = client.post('/api/fit', json={'function': 'fA', 'n': 10, 'samples': [1, 2, 3]})
        assert response.status_code == 422

    def test_unknown_method(self, client):
        """Unknown methods fail validation"""
        response = client.post('/api/fit', json={'method': 'pade', 'function': 'fA', 'n': 10})
        assert response.status_code == 422
        assert 'method' in response.json['details']

    def test_empty_body(self, client):
        """A request without JSON is a bad request"""
        assert client.post('/api/fit').status_code == 400

    def test_invalid_samples(self, client):
        """Too few samples for a spline is an input error"""
        response = client.post('/api/fit', json={'method': 'spline', 'samples': [1, 2, 3]})
        assert response.status_code == 400


class TestBenchRoutes:

    def test_converge(self, client):
        """Two methods over two n values"""
        response = client.post('/api/converge', json={'function': 'fA', 'methods': ['aaa', 'spline'],
                                                      'n_values': [8, 16]})
        assert response.status_code == 200
        curves = response.json['curves']
        assert [curve['config']['method'] for curve in curves] == ['aaa', 'spline']
        assert curves[0]['n'] == [8, 16]
        assert curves[1]['last_interpolant_n'] == 16

    def test_converge_writes_files(self, app, client):
        """out names a CSV inside the output folder, with its metadata"""
        response = client.post('/api/converge', json={'function': 'fB', 'methods': ['fh'], 'nmin': 8,
                                                      'nmax': 16, 'out': 'fB.csv', 'plot_data': True})
        assert response.status_code == 200
        folder = app.config['OUTPUT_FOLDER']
        assert os.path.isfile(os.path.join(folder, 'fB.csv'))
        assert os.path.isfile(os.path.join(folder, 'fB.plot.dat'))
        assert os.path.isfile(os.path.join(folder, 'fB.csv.meta.json'))

    def test_converge_validation(self, client):
        """n values below 4 are rejected"""
        response = client.post('/api/converge', json={'function': 'fA', 'n_values': [2, 8]})
        assert response.status_code == 422

    def test_complex_map(self, client):
        """A 3x3 map of exp(x)/sqrt(1 + 9x^2)"""
        response = client.post('/api/cmap', json={'function': 'fig1', 'n': 20, 'box': [-1, 1, -1, 1], 'res': 3})
        assert response.status_code == 200
        assert len(response.json['abserr']) == 3
        assert len(response.json['abserr'][0]) == 3

    def test_complex_map_bad_box(self, client):
        """Inverted boxes fail validation"""
        response = client.post('/api/cmap', json={'function': 'fig1', 'n': 20, 'box': [1, -1, -1, 1]})
        assert response.status_code == 422
