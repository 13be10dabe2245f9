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
"""Deadlock, lock and strong lock freedom checkers."""
from cfsm_composition.python.core.properties.properties import check_implication_chain
from cfsm_composition.python.core.properties.properties import check_property
from cfsm_composition.python.core.properties.properties import check_strong_lock_freedom
from cfsm_composition.python.core.properties.properties import DEFAULT_MAX_WITNESSES
from cfsm_composition.python.core.properties.properties import find_deadlocks
from cfsm_composition.python.core.properties.properties import find_locks
from cfsm_composition.python.core.properties.properties import PropertyChecker
from cfsm_composition.python.core.properties.properties import PropertyCheckerFactory
from cfsm_composition.python.core.properties.properties import PropertyReport
from cfsm_composition.python.core.properties.properties import replay_witness
from cfsm_composition.python.core.properties.properties import Run
from cfsm_composition.python.core.properties.properties import Witness
