from setuptools import setup, find_packages

# Leer dependencias desde requirements.txt
with open("requirements.txt") as f:
    requirements = f.read().splitlines()

setup(
    name="quiver-hopf",
    version="0.1.0",
    description="Cálculo exacto con álgebras de Hopf de carcajes",
    author="Quiver Hopf developers",
    packages=find_packages(exclude=["tests", "tests.*"]),
    include_package_data=True,
    package_data={"quiverhopf": ["fixtures/*.yaml"]},
    install_requires=requirements,  # Usar las dependencias del archivo requirements.txt
    python_requires=">=3.10",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
    ],
    entry_points={
        "console_scripts": [
            "quiverhopf=quiverhopf.main:main",
        ],
    },
)
