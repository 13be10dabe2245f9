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
"""JSON documents for property reports, certificates and fuzz reports.

The functions return plain `dict`s of strings, numbers, booleans and lists,
ready for `json.dump`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import json

from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.properties import properties


def _run_to_dict(run):
  return {
      'evidence': [str(label) for label in run.labels()],
      'lasso': run.is_lasso,
      'stem_length': len(run.stem),
  }


def witness_to_dict(witness):
  """Converts a `Witness`.

  `config` maps participants to local states. For runs, `evidence` lists the
  labels of the stem followed by the cycle, if any; for locks it is empty and
  `reachable` lists the configurations reachable from `config`.
  """
  result = {
      'kind': witness.kind,
      'config': dict(witness.configuration),
  }
  if witness.participant is not None:
    result['participant'] = witness.participant
  evidence = witness.evidence
  if isinstance(evidence, properties.Run):
    result.update(_run_to_dict(evidence))
  elif evidence is None:
    result['evidence'] = []
  else:
    result['evidence'] = []
    result['reachable'] = [dict(c) for c in evidence]
  return result


def report_to_dict(report):
  return {
      'property': report.property,
      'holds': report.holds,
      'num_violations': report.num_violations,
      'witnesses': [witness_to_dict(w) for w in report.witnesses],
  }


def certificate_to_dict(m1, m2, result):
  """Converts a `CompatibilityResult` of `m1` and `m2`."""
  return {
      'left': m1.subject,
      'right': m2.subject,
      'compatible': result.compatible,
      'initial': [m1.initial, m2.initial],
      'correspondence': [list(pair) for pair in result.correspondence],
      'borderline': [{
          'left': pair.left,
          'right': pair.right,
          'unmatched_inputs': list(pair.unmatched_inputs),
      } for pair in compatibility.borderline_pairs(m1, m2,
                                                   result.correspondence)],
  }


def composability_to_dict(report):
  return {
      'composable': report.composable,
      'compatible': report.compatible,
      'disjoint_domains': report.disjoint_domains,
      'reasons': [{'code': r.code, 'message': r.message}
                  for r in report.reasons],
  }


def fuzz_report_to_dict(report):
  return report.to_dict()


def dumps(document):
  return json.dumps(document, indent=2, sort_keys=True) + '\n'
