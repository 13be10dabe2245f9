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
"""Gateways and the composition of systems through them."""
from cfsm_composition.python.core.gateway.composition import check_composability
from cfsm_composition.python.core.gateway.composition import ComposabilityReport
from cfsm_composition.python.core.gateway.composition import compose_systems
from cfsm_composition.python.core.gateway.composition import ComposedSystem
from cfsm_composition.python.core.gateway.composition import LEFT
from cfsm_composition.python.core.gateway.composition import nof_pair
from cfsm_composition.python.core.gateway.composition import project_configuration
from cfsm_composition.python.core.gateway.composition import provenance_header
from cfsm_composition.python.core.gateway.composition import RIGHT
from cfsm_composition.python.core.gateway.composition import sequential_gateways
from cfsm_composition.python.core.gateway.composition import verify_projection_lemma
from cfsm_composition.python.core.gateway.gateway import build_gateway
from cfsm_composition.python.core.gateway.gateway import Gateway
from cfsm_composition.python.core.gateway.gateway import nof_state
from cfsm_composition.python.core.gateway.gateway import project_state
from cfsm_composition.python.core.gateway.gateway import Provenance
from cfsm_composition.python.core.internal.errors import CompositionError
