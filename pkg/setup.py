from setuptools import find_packages, setup

import re


def load_reqs(filename):
    with open(filename) as reqs_file:
        return [
            re.sub('==', '>=', line) for line in reqs_file.readlines()
            if not re.match(r'\s*#', line)
        ]


version = open('VERSION').read().rstrip('\n')
requirements = load_reqs('requirements.txt')
test_requirements = load_reqs('test-requirements.txt')

try:
    README = open('README.rst').read() + '\n\n' + open('CHANGES.rst').read()
except IOError:
    README = None

setup(
    name='krcrystal',
    version=version,
    description='Kirillov-Reshetikhin crystals of types D_n^(1), B_n^(1), A_{2n-1}^(2)',
    long_description=README,
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
    ],
    license='MIT',
    packages=find_packages(),
    zip_safe=False,
    python_requires='>=3.10',
    install_requires=requirements,
    entry_points={
        'console_scripts': ['krcrystal = krcrystal.cli:cli'],
    },
    test_suite='tests',
    tests_require=test_requirements
)
