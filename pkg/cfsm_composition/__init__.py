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
"""Init module for the CFSM composition Python API.

```
import cfsm_composition as cfsmc
```
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


# The numerical stack is checked before the imports that populate the
# namespace, since they import it too.
#
# pylint: disable=g-import-not-at-top


def _ensure_numerical_stack():  # pylint: disable=g-statement-before-imports
  """Attempt to import numpy and scipy, and ensure their versions suffice.

  Raises:
    ImportError: if numpy or scipy is not importable or too old.
  """
  try:
    import numpy as np
    import scipy
  except ImportError:
    print(
        '\n\nFailed to import numpy or scipy. CFSM composition explores '
        'semantics with numpy and scipy.sparse; please install both, for '
        'example with `pip install -r requirements.txt`.\n\n')
    raise

  #
  # Update these whenever we need to depend on newer releases.
  #
  required = (('numpy', np.__version__, '1.14.0'),
              ('scipy', scipy.__version__, '1.0.0'))
  for name, present, minimum in required:
    if np.lib.NumpyVersion(present) < minimum:
      raise ImportError(
          'This version of CFSM composition requires {name} version >= '
          '{required}; Detected an installation of version {present}. '
          'Please upgrade {name} to proceed.'.format(
              name=name, required=minimum, present=present))


_ensure_numerical_stack()


import inspect as _inspect
import os as _os
import sys as _sys


# To ensure users only access the expected public API, the API structure is
# created in the `api` directory. Import all api modules.
# pylint: disable=wildcard-import
from cfsm_composition.python.core.api import *
# pylint: enable=wildcard-import
from cfsm_composition.python.core.version import __version__


# Use the automata module to fetch the path for the `api` directory.
_API_MODULE = automata  # pylint: disable=undefined-variable
# Returns $(install_dir)/cfsm_composition/python/core/api
_api_dir = _os.path.dirname(_os.path.dirname(_inspect.getfile(_API_MODULE)))

# Add the `api` directory to `__path__` so that `from * import module` works.
_current_module = _sys.modules[__name__]
if not hasattr(_current_module, '__path__'):
  __path__ = [_api_dir]
elif _api_dir not in __path__:
  __path__.append(_api_dir)


# Delete python module so that users only access the code using the API path
# rather than using the code directory structure.
# This will disallow usage such as `cfsmc.python.core.gateway`.
# pylint: disable=undefined-variable
try:
  del python
except NameError:
  pass
# pylint: enable=undefined-variable
