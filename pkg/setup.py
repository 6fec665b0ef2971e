#! /usr/bin/env python

from setuptools import setup, find_packages

# Please make sure to cap all dependency versions, in order to avoid unwanted
# functional and integration breaks caused by external code updates.

general_requirements = [
    'dpath >= 1.5.0, < 2.0.0',
    'pytest >= 4.4.1, < 8.0.0',
    'numpy >= 1.17, < 2.0',
    'scipy >= 1.5.0, < 2.0.0',
    'PyYAML >= 3.10',
    'sortedcontainers == 2.2.2',
    ]

dev_requirements = [
    'autopep8 >= 1.4.0, < 1.6.0',
    'flake8 >= 3.9.0, < 4.0.0',
    'flake8-bugbear >= 19.3.0, < 20.0.0',
    'flake8-print >= 3.1.0, < 4.0.0',
    'flake8-rst-docstrings < 1.0.0',
    'pytest-cov >= 2.6.1, < 3.0.0',
    'mypy >= 0.701, < 0.800',
    ]

setup(
    name = 'Reuse-VR',
    version = '0.1.0',
    classifiers = [
        'Development Status :: 3 - Alpha',
        'Operating System :: POSIX',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics',
        ],
    description = 'Sample reuse for variance-reduced optimization, MDP, game and eigenvector solvers',
    keywords = 'variance reduction optimization sample complexity mdp saddle point',

    entry_points = {
        'console_scripts': [
            'reuse-vr=reuse_vr.scripts.reuse_vr_command:main',
            ],
        },
    extras_require = {
        'dev': dev_requirements,
        },
    include_package_data = True,
    package_data = {'reuse_vr.settings': ['defaults.yaml']},
    install_requires = general_requirements,
    packages = find_packages(exclude=['tests*']),
    )
