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
"""Graphviz rendering of machines and of their semantics."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.semantics import semantics


def _gvquote(s):
  return '"{}"'.format(s.replace('\\', '\\\\').replace('"', r'\"'))


def _graph(name, nodes, initial, edges):
  yield 'digraph {} {{\n'.format(_gvquote(name))
  yield '  rankdir=LR;\n'
  for node in nodes:
    shape = 'doublecircle' if node == initial else 'circle'
    yield '  {} [shape={}];\n'.format(_gvquote(node), shape)
  for source, label, target in edges:
    yield '  {} -> {} [label={}];\n'.format(
        _gvquote(source), _gvquote(target), _gvquote(str(label)))
  yield '}\n'


def graphviz(target, name=None):
  """Produces a DOT graph as an iterable of lines.

  Args:
    target: A `Cfsm`, an `Fsa` or a `SemLts`.
    name: Graph name. Defaults to the machine owner, or `semantics`.

  Returns:
    A generator of text lines. Nodes come in state order for machines and in
    lexicographic order for semantics; the initial node is a double circle.

  Raises:
    TypeError: If `target` cannot be rendered.
  """
  if isinstance(target, cfsm_lib.Cfsm):
    return _graph(name or target.subject, target.states, target.initial,
                  target.transitions)
  if isinstance(target, fsa_lib.Fsa):
    return _graph(name or 'fsa', target.states, target.initial,
                  target.transitions)
  if isinstance(target, semantics.SemLts):
    string = semantics.configuration_string
    return _graph(name or 'semantics',
                  [string(c) for c in target.sorted_configurations],
                  string(target.initial),
                  [(string(s), label, string(t))
                   for s, label, t in target.edges])
  raise TypeError('cannot export {!r} to DOT'.format(target))


def export_dot(target, name=None):
  """Renders `target` as DOT text; see `graphviz`."""
  return ''.join(graphviz(target, name))
