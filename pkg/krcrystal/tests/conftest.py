from krcrystal.tests import global_data
pytest_plugins = ['krcrystal.tests.fixtures']


def pytest_addoption(parser):
    parser.addoption('--complete', action='store_true')
    parser.addoption('--max-vertices', action='store', type=int, default=5000)


def pytest_configure(config):
    global_data['complete'] = config.getoption('complete')
    global_data['max_vertices'] = config.getoption('max_vertices')
