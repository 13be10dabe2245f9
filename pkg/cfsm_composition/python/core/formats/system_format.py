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
"""Textual format of communicating systems.

A system file lists the machines of a system. Labels name only the other
endpoint; the owner of the machine is implicit, so non-local labels cannot be
written at all:

  # Comments run to the end of the line.
  system gateway_left

  machine A {
    init 0
    0 tau 1
    1 ! H m 2      # A sends m to H
  }

  machine H {
    init 0
    0 ? A m 1      # H receives m from A
  }

Names are tokens of `[A-Za-z0-9_']`. States may also be written between
double quotes, which is how generated states such as `0>1` or `0#out0` are
serialized. The keywords `system`, `machine`, `init` and `tau` must be quoted
when used as state names.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import re

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import fsa as fsa_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.semantics import system as system_lib

ActionLabel = labels.ActionLabel

KEYWORDS = frozenset(['system', 'machine', 'init', 'tau'])

_TOKEN_SPEC = [
    ('comment', r'#[^\n]*'),
    ('newline', r'\n'),
    ('space', r'[ \t\r]+'),
    ('quoted', r'"[^"\n]*"'),
    ('word', r"[A-Za-z0-9_']+"),
    ('symbol', r'[{}!?]'),
    ('error', r'.'),
]
_TOKEN_RE = re.compile('|'.join(
    '(?P<{}>{})'.format(name, pattern) for name, pattern in _TOKEN_SPEC))
_WORD_RE = re.compile(r"^[A-Za-z0-9_']+$")

_Token = collections.namedtuple('_Token', ['kind', 'value', 'line', 'column'])

# A machine as written in a file, before validation.
RawMachine = collections.namedtuple(
    'RawMachine', ['participant', 'fsa', 'line', 'column', 'locations'])


def _tokenize(text):
  line, line_start = 1, 0
  for match in _TOKEN_RE.finditer(text):
    kind = match.lastgroup
    column = match.start() - line_start + 1
    if kind == 'newline':
      line, line_start = line + 1, match.end()
    elif kind in ('comment', 'space'):
      continue
    elif kind == 'error':
      raise errors.ParseError(
          'unexpected character {!r}'.format(match.group()), line, column)
    elif kind == 'symbol':
      yield _Token(match.group(), match.group(), line, column)
    elif kind == 'quoted':
      value = match.group()[1:-1]
      if not value:
        raise errors.ParseError('empty quoted state', line, column)
      yield _Token('state', value, line, column)
    else:
      yield _Token('word', match.group(), line, column)
  yield _Token('eof', '', line, len(text) - line_start + 1)


class _Parser(object):
  """Recursive descent parser over the token stream."""

  def __init__(self, text):
    self._tokens = list(_tokenize(text))
    self._pos = 0

  def _peek(self):
    return self._tokens[self._pos]

  def _next(self):
    token = self._tokens[self._pos]
    if token.kind != 'eof':
      self._pos += 1
    return token

  def _error(self, token, expected):
    found = 'end of file' if token.kind == 'eof' else repr(token.value)
    return errors.ParseError(
        'expected {}, found {}'.format(expected, found), token.line,
        token.column)

  def _keyword(self, keyword):
    token = self._next()
    if token.kind != 'word' or token.value != keyword:
      raise self._error(token, repr(keyword))
    return token

  def _symbol(self, symbol):
    token = self._next()
    if token.kind != symbol:
      raise self._error(token, repr(symbol))
    return token

  def _name(self, what):
    token = self._next()
    if token.kind != 'word':
      raise self._error(token, what)
    return token

  def _state(self):
    token = self._next()
    if token.kind == 'state':
      return token
    if token.kind == 'word':
      if token.value in KEYWORDS:
        raise errors.ParseError(
            'keyword {!r} cannot be a state name; quote it'.format(
                token.value), token.line, token.column)
      return token
    raise self._error(token, 'a state')

  def parse(self):
    self._keyword('system')
    name = self._name('a system name').value
    machines = []
    seen = set()
    while True:
      token = self._peek()
      if token.kind == 'eof':
        break
      machine = self._machine()
      if machine.participant in seen:
        raise errors.ParseError(
            'duplicate machine for {}'.format(machine.participant),
            machine.line, machine.column)
      seen.add(machine.participant)
      machines.append(machine)
    if not machines:
      raise self._error(self._peek(), "'machine'")
    return name, machines

  def _machine(self):
    start = self._keyword('machine')
    owner = self._name('a participant name').value
    self._symbol('{')
    init_token = self._peek()
    if init_token.kind != 'word' or init_token.value != 'init':
      raise self._error(init_token, "'init'")
    self._next()
    initial = self._state().value
    states = {initial}
    transitions = []
    locations = {}
    while True:
      token = self._peek()
      if token.kind == '}':
        self._next()
        break
      if token.kind == 'word' and token.value == 'init':
        raise errors.ParseError(
            'duplicate init in machine {}'.format(owner), token.line,
            token.column)
      transition = self._edge(owner)
      states.update([transition.source, transition.target])
      transitions.append(transition)
      locations.setdefault(transition, (token.line, token.column))
    fsa = fsa_lib.Fsa(states, initial, transitions)
    return RawMachine(owner, fsa, start.line, start.column, locations)

  def _edge(self, owner):
    source = self._state()
    token = self._next()
    try:
      if token.kind == 'word' and token.value == 'tau':
        label = ActionLabel.tau()
      elif token.kind in ('!', '?'):
        partner = self._name('a participant name').value
        msg = self._name('a message name').value
        if token.kind == '!':
          label = ActionLabel.output(owner, partner, msg)
        else:
          label = ActionLabel.input(partner, owner, msg)
      else:
        raise self._error(token, "'tau', '!' or '?'")
    except errors.ParseError:
      raise
    except ValueError as e:
      raise errors.ParseError(str(e), source.line, source.column)
    target = self._state()
    return fsa_lib.Transition(source.value, label, target.value)


def parse_raw_system(text):
  """Parses a system file without validating its machines.

  Returns:
    A tuple `(name, machines)` where `machines` is a list of `RawMachine`.

  Raises:
    ParseError: On syntax errors.
  """
  return _Parser(text).parse()


def _locate(machine, violation):
  return machine.locations.get(violation.transition,
                               (machine.line, machine.column))


def _located_error(message, located):
  """A `ParseError` at the first location of `located` `(machine, v)` pairs."""
  locations = [_locate(machine, v) for machine, v in located]
  line, column = min(locations)
  return errors.ParseError(message, line, column, [v for _, v in located],
                           locations)


def _validate_machines(machines, validate, problem):
  """Validates every machine, reporting all invalid ones at once.

  Args:
    machines: The `RawMachine`s of a file.
    validate: Callable from a `RawMachine` to a `Cfsm`, raising
      `CfsmValidationError`.
    problem: Describes the failure, e.g. `'not a valid CFSM'`.

  Returns:
    A `dict` from participant to `Cfsm`.

  Raises:
    ParseError: Listing the violations of every invalid machine, each at its
      own location.
  """
  validated = {}
  invalid = []
  located = []
  for machine in machines:
    try:
      validated[machine.participant] = validate(machine)
    except errors.CfsmValidationError as e:
      invalid.append(machine.participant)
      located.extend((machine, v) for v in e.violations)
  if invalid:
    raise _located_error(
        'machine{} {} {} {}'.format(
            's' if len(invalid) > 1 else '', ', '.join(invalid),
            'are' if len(invalid) > 1 else 'is', problem), located)
  return validated


def validate_raw_machine(machine):
  """Validates a `RawMachine` as a CFSM."""
  return cfsm_lib.validate_cfsm(machine.fsa, machine.participant)


def validate_raw_system(name, machines, validated):
  """Validates a system assembled from `RawMachine`s, with located errors.

  Args:
    name: System name.
    machines: The `RawMachine`s, used to locate errors.
    validated: A `dict` from participant to `Cfsm`.

  Returns:
    A `System`.
  """
  try:
    return system_lib.validate_system(validated, name=name)
  except errors.SystemValidationError as e:
    located = []
    for v in e.violations:
      owner = next((m for m in machines if v.transition in m.locations),
                   machines[0])
      located.append((owner, v))
    raise _located_error('system {} is not closed'.format(name), located)


def parse_system_file(text):
  """Parses and validates a system file.

  Args:
    text: Contents of a system file.

  Returns:
    A validated `System`.

  Raises:
    ParseError: On syntax errors and on CFSM or system validation errors.
      Every violation is reported with the location of its edge or machine;
      the error itself sits at the first of them.
  """
  name, machines = parse_raw_system(text)
  validated = _validate_machines(machines, validate_raw_machine,
                                 'not a valid CFSM')
  return validate_raw_system(name, machines, validated)


def format_state(state):
  """Writes a state id, quoting it when it is not a plain token."""
  if _WORD_RE.match(state) and state not in KEYWORDS:
    return state
  if '"' in state or '\n' in state:
    raise ValueError('state {!r} cannot be serialized'.format(state))
  return '"{}"'.format(state)


def format_edge(transition):
  source = format_state(transition.source)
  target = format_state(transition.target)
  label = transition.label
  if label.is_tau:
    return '{} tau {}'.format(source, target)
  return '{} {} {} {} {}'.format(source, label.kind, label.partner, label.msg,
                                 target)


def serialize_system(system, header=()):
  """Writes `system` in canonical form.

  Machines are sorted by participant and edges by source, label and target,
  so serializing a parsed file twice gives the same text.

  Args:
    system: A `System`.
    header: Lines to emit as leading comments.

  Returns:
    The file contents.
  """
  lines = ['# ' + line if line else '#' for line in header]
  lines.append('system {}'.format(system.name))
  for participant in system.participants:
    machine = system[participant]
    lines.append('')
    lines.append('machine {} {{'.format(participant))
    lines.append('  init {}'.format(format_state(machine.initial)))
    for transition in machine.transitions:
      lines.append('  ' + format_edge(transition))
    lines.append('}')
  return '\n'.join(lines) + '\n'


def parse_symmetric_system_file(text):
  """Parses a system whose outputs may lack their tau guard.

  Machines without tau transitions are read as written for symmetric
  synchronisation and have their outputs guarded by `normalize_outputs`.
  Machines with tau transitions must already be valid CFSMs.

  Args:
    text: Contents of a system file.

  Returns:
    A validated `System`.

  Raises:
    ParseError: On syntax errors and on validation errors, located.
  """
  name, machines = parse_raw_system(text)

  def normalize(machine):
    if any(t.label.is_tau for t in machine.fsa.transitions):
      return validate_raw_machine(machine)
    return cfsm_lib.normalize_outputs(machine.fsa, machine.participant)

  validated = _validate_machines(machines, normalize,
                                 'not a valid CFSM or cannot be normalized')
  return validate_raw_system(name, machines, validated)
