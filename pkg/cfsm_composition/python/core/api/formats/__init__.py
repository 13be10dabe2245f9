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
"""System files, DOT export and JSON witnesses."""
from cfsm_composition.python.core.formats.dot_export import export_dot
from cfsm_composition.python.core.formats.system_format import parse_symmetric_system_file
from cfsm_composition.python.core.formats.system_format import parse_system_file
from cfsm_composition.python.core.formats.system_format import serialize_system
from cfsm_composition.python.core.formats.witness_json import certificate_to_dict
from cfsm_composition.python.core.formats.witness_json import report_to_dict
from cfsm_composition.python.core.internal.errors import ParseError
