# Copyright 2021 The CFSM Composition Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Install cfsm_composition."""
import datetime
import os
import sys

from setuptools import find_packages
from setuptools import setup
from setuptools.dist import Distribution

# To enable importing version.py directly, we add its path to sys.path.
version_path = os.path.join(
    os.path.dirname(__file__), 'cfsm_composition', 'python/core')
sys.path.append(version_path)
from version import __version__  # pylint: disable=g-import-not-at-top

REQUIRED_PACKAGES = [
    'absl-py~=0.7',
    'numpy~=1.14',
    'scipy>=1.0',
    'six~=1.10',
]

if '--release' in sys.argv:
  release = True
  sys.argv.remove('--release')
else:
  # Build a nightly package by default.
  release = False

if release:
  project_name = 'cfsm-composition'
else:
  # Nightly releases use date-based versioning of the form
  # '0.1.0.dev20210305'
  project_name = 'cfsm-composition-nightly'
  datestring = datetime.datetime.now().strftime('%Y%m%d')
  __version__ += datestring


class BinaryDistribution(Distribution):
  """This class is needed in order to create OS specific wheels."""

  def has_ext_modules(self):
    return False

setup(
    name=project_name,
    version=__version__,
    description='Asymmetric synchronous communicating finite-state machines:'
    ' semantics, communication properties, compatibility and composition'
    ' of systems through gateways.',
    author='The CFSM Composition Authors',
    license='Apache 2.0',
    packages=find_packages(),
    install_requires=REQUIRED_PACKAGES,
    # Add in any packaged data.
    include_package_data=True,
    package_data={
        'cfsm_composition.python.core.internal.testing': ['testdata/*.sys'],
    },
    exclude_package_data={'': ['BUILD']},
    zip_safe=False,
    distclass=BinaryDistribution,
    entry_points={
        'console_scripts': [
            'cfsm = cfsm_composition.python.tools.cfsm_tool:run_main',
        ],
    },
    classifiers=[
        'Intended Audience :: Developers',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Topic :: Scientific/Engineering',
        'Topic :: Software Development :: Testing',
    ],
    keywords='communicating finite state machines composition deadlock lock',
)
