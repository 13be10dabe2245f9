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
"""Action labels, finite state automata and CFSMs."""
from cfsm_composition.python.core.automata.cfsm import Cfsm
from cfsm_composition.python.core.automata.cfsm import classify_state
from cfsm_composition.python.core.automata.cfsm import is_sequential
from cfsm_composition.python.core.automata.cfsm import machine_profile
from cfsm_composition.python.core.automata.cfsm import MachineProfile
from cfsm_composition.python.core.automata.cfsm import normalize_outputs
from cfsm_composition.python.core.automata.cfsm import StateClass
from cfsm_composition.python.core.automata.cfsm import validate_cfsm
from cfsm_composition.python.core.automata.fsa import Fsa
from cfsm_composition.python.core.automata.fsa import Transition
from cfsm_composition.python.core.automata.labels import ActionLabel
from cfsm_composition.python.core.internal.errors import CfsmValidationError
from cfsm_composition.python.core.internal.errors import InternalInconsistencyError
from cfsm_composition.python.core.internal.errors import UnknownStateError
from cfsm_composition.python.core.internal.errors import Violation
