#! /usr/bin/env python

from setuptools import setup, find_packages

import circulant.core

def read_requirements(path):
    requirements = list()
    with open(path, 'r') as requirements_file:
        for requirement in requirements_file:
            requirement = requirement.strip()
            if requirement:
                requirements.append(requirement)
    return requirements

requirements = read_requirements('requirements.txt')
test_requirements = read_requirements('requirements-test.txt')

setup(
    name='circulant',
    version=circulant.core.__version__,
    description='Exact enumeration of circulant graphs and the identities between the counts',
    author='Tim Johnson',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=requirements,
    tests_require=test_requirements,
    extras_require={'test' : test_requirements},
    python_requires='>=3.10',
    scripts=['bin/circulant']
)
