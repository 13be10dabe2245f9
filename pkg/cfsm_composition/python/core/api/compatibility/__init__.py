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
"""Compatibility of CFSMs through io-correspondences."""
from cfsm_composition.python.core.compatibility.compatibility import borderline_pairs
from cfsm_composition.python.core.compatibility.compatibility import check_compatibility
from cfsm_composition.python.core.compatibility.compatibility import CompatibilityResult
from cfsm_composition.python.core.compatibility.compatibility import dual_label
from cfsm_composition.python.core.compatibility.compatibility import greatest_io_correspondence
from cfsm_composition.python.core.compatibility.compatibility import io_correspondence_violations
from cfsm_composition.python.core.compatibility.compatibility import io_projection
from cfsm_composition.python.core.compatibility.compatibility import IoCorrespondence
from cfsm_composition.python.core.compatibility.compatibility import IoLabel
from cfsm_composition.python.core.compatibility.compatibility import is_io_correspondence
