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
"""Systems and their asymmetric synchronous semantics."""
from cfsm_composition.python.core.internal.errors import StateExplosionError
from cfsm_composition.python.core.internal.errors import SystemValidationError
from cfsm_composition.python.core.internal.errors import UnknownParticipantError
from cfsm_composition.python.core.semantics.semantics import build_semantics
from cfsm_composition.python.core.semantics.semantics import configuration_string
from cfsm_composition.python.core.semantics.semantics import DEFAULT_MAX_CONFIGURATIONS
from cfsm_composition.python.core.semantics.semantics import enabled_participants
from cfsm_composition.python.core.semantics.semantics import find_run
from cfsm_composition.python.core.semantics.semantics import initial_configuration
from cfsm_composition.python.core.semantics.semantics import make_configuration
from cfsm_composition.python.core.semantics.semantics import SemLabel
from cfsm_composition.python.core.semantics.semantics import SemLts
from cfsm_composition.python.core.semantics.system import sequential_participants
from cfsm_composition.python.core.semantics.system import System
from cfsm_composition.python.core.semantics.system import validate_system
