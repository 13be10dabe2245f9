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
"""Import API modules for CFSM composition."""
from cfsm_composition.python.core.api import automata
from cfsm_composition.python.core.api import compatibility
from cfsm_composition.python.core.api import formats
from cfsm_composition.python.core.api import fuzz
from cfsm_composition.python.core.api import gateway
from cfsm_composition.python.core.api import properties
from cfsm_composition.python.core.api import semantics
