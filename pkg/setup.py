from setuptools import setup, find_namespace_packages

with open('README.md', 'rt', encoding='utf_8') as f:
    long_desc = f.read()

setup(
    name='edf-forge',
    version='0.1.0',
    license='MIT',
    description='Graph valuations, blow-up constructions and verified external difference families.',
    long_description=long_desc,
    long_description_content_type='text/markdown',
    packages=find_namespace_packages(include=['edfforge', 'edfforge.*'],
                                     exclude=["*.test", "*.test.*"]),
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.9',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords='graceful labelling external difference family combinatorics',
    python_requires='>=3.9',
    install_requires=['numpy', 'networkx', 'sympy>=1.13'],
    entry_points={'console_scripts': ['edf-forge=edfforge.cli:main']}
)
