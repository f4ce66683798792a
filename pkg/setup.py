#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['mpmath>=1.2', 'gmpy2>=2.1']

setup_requirements = [ ]

test_requirements = ['hypothesis>=6.0', 'jsonschema>=3.2']

setup(
    author="Patrick Boettcher",
    author_email='p@yai.se',
    python_requires='>=3.9',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Exact verification of rational divisors and lower bounds for lcm{m²+c, ..., n²+c}",
    entry_points={
        'console_scripts': [
            'quadlcm=quadlcm.cli:main',
        ],
    },
    install_requires=requirements,
    extras_require={'test': test_requirements},
    license="GNU General Public License v3",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='quadlcm lcm quadratic-sequences bezout gaussian-integers',
    name='quadlcm',
    packages=find_packages(include=['quadlcm', 'quadlcm.*']),
    setup_requires=setup_requirements,
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/pboettch/quadlcm',
    version='0.1.0',
    zip_safe=False,
)
