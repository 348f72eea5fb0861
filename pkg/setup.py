from setuptools import setup, find_packages
from os import path

here = path.abspath(path.dirname(__file__))

with open(path.join(here, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="netcode",
    version="0.1.0",
    description="Linear network coding, multicast matroids and GF(2) solution lifting",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    keywords="network coding matroid gammoid finite field",
    packages=find_packages("src"),
    package_dir={"": "src"},
    package_data={"netcode.data": ["*.json", "*.txt"]},
    python_requires=">=3.9",
    install_requires=["dotmap", "numpy", "python-dotenv", "galois", "networkx"],
    extras_require={"tests": ["pytest"]},
    entry_points={"console_scripts": ["netcode=netcode.cmd:main"]},
)
