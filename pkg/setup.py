from setuptools import setup, find_namespace_packages
import io
import os.path as op

VERSION = "0.1.0"


# get the dependencies and installs
with io.open(op.join('requirements.txt'), encoding='utf-8') as f:
    all_reqs = f.read().split('\n')

install_requires = [x.strip() for x in all_reqs if x.strip() and 'git+' not in x]


packages = find_namespace_packages(include=['aiearth.*'])
setup(name='aiearth-repetition',
      version=VERSION,
      description='Repetition thresholds of paths, caterpillars and bounded-degree trees',
      author='AI Earth developer team',
      packages=packages,
      python_requires='>=3.8',
      include_package_data=True,
      package_data={'aiearth.repetition': ['configs/*.yaml']},
      entry_points={
        'console_scripts': ['aie-rt=aiearth.repetition.cli.main:main'],
      },
      install_requires=install_requires,
)
