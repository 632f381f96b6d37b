#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

with open('requirements.txt', 'r') as req_file:
    requirements = req_file.read().splitlines()

test_requirements = ['pytest>=3', 'hypothesis>=6']

setup(
    author="craftworks",
    author_email='dev-accounts@craftworks.at',
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Logharmonic mappings with typically real rotations",
    entry_points={
        'console_scripts': ['pylogharmonic=pylogharmonic.cli:main'],
    },
    install_requires=requirements,
    license="MIT license",
    long_description_content_type='text/x-rst',
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    keywords='pylogharmonic',
    name='pylogharmonic',
    packages=find_packages(include=['pylogharmonic', 'pylogharmonic.*']),
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/craftworksgmbh/pylogharmonic',
    version='0.1.0',
    zip_safe=False,

)
