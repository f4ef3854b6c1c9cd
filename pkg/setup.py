# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

setup(
    name="spectra",
    version="0.1.0",
    description="Autovalores de Dirichlet e déficit de Hessiana em anéis e cilindros",
    packages=find_packages("src"),
    package_dir={"": "src"},
    python_requires=">=3.10",
    install_requires=[
        "numpy>=2.0",
        "scipy>=1.13",
        "matplotlib>=3.8",
        "tabulate>=0.9",
        "rich>=13.0",
        "python-dotenv>=1.0",
    ],
    extras_require={"test": ["pytest>=8.0"]},
    entry_points={"console_scripts": ["spectra=spectra.main:main"]},
    test_suite="tests"
)
