import os

import pkg_resources
from setuptools import setup, find_packages

setup(
    name="semireflex",
    py_modules=["semireflex"],
    version="1.0",
    description="Real-parameter Ehrhart step functions and semi-reflexive polytopes in exact arithmetic",
    packages=find_packages(),
    install_requires=[
        str(r)
        for r in pkg_resources.parse_requirements(
            open(os.path.join(os.path.dirname(__file__), "requirements.txt"))
        )
    ],
    entry_points={
        "console_scripts": ["semireflex=semireflex.cli:main"],
    },
    include_package_data=True
)
