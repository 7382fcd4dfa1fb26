from setuptools import setup, find_packages
import os

exec(open("heckemod/__version__.py").read())
with open("README.md") as f:
    long_description = f.read()

description = "Exact Hecke characteristic polynomials at level 1, their factorizations modulo primes, and Galois certificates"

if not os.getenv("READTHEDOCS"):
    setup(
        name="heckemod",
        version=__version__,
        packages=find_packages(exclude=["tests"]),
        description=description,
        long_description=long_description,
        long_description_content_type="text/markdown",
        license="MIT",
        keywords=["modular forms", "Hecke operators", "finite fields", "Galois groups"],
        zip_safe=False,
        python_requires=">=3.8",
        install_requires=[
            "numpy >= 1.17.0",
            "numba >= 0.45.0",
            "sympy >= 1.5",
        ],
        extras_require={"test": ["pytest >= 6.0"]},
        entry_points={"console_scripts": ["heckemod=heckemod.cli.main:run"]},
    )
else:
    setup(
        name="heckemod",
        version=__version__,
        packages=find_packages(exclude=["tests"]),
        description=description,
        long_description=long_description,
        long_description_content_type="text/markdown",
        license="MIT",
        keywords=["modular forms", "Hecke operators", "finite fields", "Galois groups"],
        zip_safe=False,
        install_requires=[],
    )
