"""Setup configuration for aniso_duality."""

from setuptools import setup, find_packages

setup(
    name="aniso_duality",
    version="0.1.0",
    description="Numerical toolkit for anisotropic mixed-norm Hardy/Campanato duality",
    packages=find_packages(where="src"),
    package_dir={"": "src"},
    python_requires=">=3.8",
    install_requires=[
        "pydantic>=2.0.0",
        "numpy>=1.22",
        "scipy>=1.9",
    ],
    extras_require={
        "dev": [
            "pytest>=7.0.0",
        ],
    },
    entry_points={
        "console_scripts": [
            "aniso-duality=aniso_duality.run:main",
        ],
    },
)
