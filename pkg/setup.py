from setuptools import setup

setup(
    name='lbs_parens',
    version='0.1.0',
    packages=['lbs_parens'],
    install_requires=[
        'numpy',
        'click',
        'tensorboardX',
    ],
    extras_require={
        'tests': ['pytest', 'hypothesis'],
    },
    entry_points={
        'console_scripts': ['lbs=lbs_parens.cli:cli'],
    },
)
