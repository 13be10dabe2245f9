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
"""Random systems and randomized checking of property preservation."""
from cfsm_composition.python.core.fuzz.generators import derive_compatible_peer
from cfsm_composition.python.core.fuzz.generators import FuzzParams
from cfsm_composition.python.core.fuzz.generators import lock_freedom_regression_pair
from cfsm_composition.python.core.fuzz.generators import random_machine
from cfsm_composition.python.core.fuzz.generators import random_system
from cfsm_composition.python.core.fuzz.preservation import FuzzReport
from cfsm_composition.python.core.fuzz.preservation import FuzzViolation
from cfsm_composition.python.core.fuzz.preservation import run_preservation_fuzz
