#!/usr/bin/env python

from setuptools import setup, find_packages

setup(
    name="py-cyclepatterns",
    version="0.1.0",

    description='Exact pattern-matching statistics in the cycle structure of permutations',
    long_description=open('README.rst').read(),
    author='py-cyclepatterns contributors',
    keywords='permutations combinatorics generating-functions',
    license='BSD License',
    classifiers=[
        "Development Status :: 3 - Alpha",
            'Intended Audience :: Science/Research',
            'License :: OSI Approved :: BSD License',
            'Operating System :: OS Independent',
            'Programming Language :: Python',
            'Programming Language :: Python :: 3',
            'Programming Language :: Python :: 3.8',
            'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires=">=3.8",
    install_requires=["sympy >= 1.7"],
    extras_require={"test": ["hypothesis"]},
    packages=find_packages(exclude=["test"]),
    include_package_data=True,
    entry_points={"console_scripts": ["cyclepatterns = cyclepatterns.__main__:main"]},
)
# vim: tabstop=8 expandtab shiftwidth=4 softtabstop=4
