from setuptools import setup, find_packages

__version__ = '0.1.0'

with open("README.md", "r", encoding="utf-8") as fh:
    long_description = fh.read()

setup(
    name='concatprover',
    version=__version__,
    description='Certified replay of the proofs that determine the Fibonacci numbers formed by concatenating a '
                'Fibonacci and a Lucas number.',
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics"
    ],
    packages=find_packages(include=['concatprover', 'concatprover.*']),
    python_requires='>=3.8',
    install_requires=['numpy', 'pyarrow>=3.0', 'mpmath', 'gmpy2', 'tqdm'],
    extras_require={'test': ['pytest'], 'docs': ['sphinx', 'sphinx_rtd_theme']},
    entry_points={'console_scripts': ['concat-prover = concatprover.cli:main']},
    license="MIT",
    zip_safe=False,
)
