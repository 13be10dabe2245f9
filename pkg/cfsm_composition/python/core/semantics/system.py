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
"""Communicating systems: closed maps from participants to local CFSMs."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import six

from cfsm_composition.python.core.automata import cfsm as cfsm_lib
from cfsm_composition.python.core.automata import labels
from cfsm_composition.python.core.internal import errors

NON_LOCAL_MACHINE = 'non-local-machine'
DANGLING_PARTICIPANT = 'dangling-participant'
EMPTY_SYSTEM = 'empty-system'


class System(object):
  """A validated communicating system.

  Do not construct directly; use `validate_system`.
  """

  def __init__(self, name, machines):
    self._name = name
    self._participants = tuple(sorted(machines))
    self._machines = dict(machines)

  @property
  def name(self):
    return self._name

  @property
  def participants(self):
    """Participant names in sorted order."""
    return self._participants

  @property
  def machines(self):
    """A fresh `dict` from participant to `Cfsm`."""
    return dict(self._machines)

  def __getitem__(self, participant):
    try:
      return self._machines[participant]
    except KeyError:
      raise errors.UnknownParticipantError(
          'unknown-participant: {} is not in the domain of system {}'.format(
              participant, self._name))

  def __contains__(self, participant):
    return participant in self._machines

  def __len__(self):
    return len(self._participants)

  def __iter__(self):
    return iter(self._participants)

  def __eq__(self, other):
    if not isinstance(other, System):
      return NotImplemented
    return self._name == other._name and self._machines == other._machines

  def __ne__(self, other):
    result = self.__eq__(other)
    if result is NotImplemented:
      return result
    return not result

  def __hash__(self):
    return hash((self._name, self._participants))

  def __repr__(self):
    return 'System(name={!r}, participants={})'.format(
        self._name, list(self._participants))


def validate_system(machines, name='S'):
  """Checks locality and closedness of a map of machines.

  Args:
    machines: A `dict` from participant name to `Cfsm`.
    name: Name of the system, used by serialization and reports.

  Returns:
    A `System`.

  Raises:
    TypeError: If a value of `machines` is not a `Cfsm`.
    SystemValidationError: Listing every non-local machine and every label
      that mentions a participant outside the domain.
  """
  labels.validate_token(name, 'system name')
  violations = []
  if not machines:
    violations.append(errors.Violation(
        EMPTY_SYSTEM, None, 'a system needs at least one machine'))
  for participant, machine in sorted(six.iteritems(machines)):
    labels.validate_token(participant, 'participant')
    if not isinstance(machine, cfsm_lib.Cfsm):
      raise TypeError('machine of {} must be a Cfsm, got {!r}'.format(
          participant, machine))
    if machine.subject != participant:
      violations.append(errors.Violation(
          NON_LOCAL_MACHINE, None,
          'machine owned by {} is assigned to {}'.format(
              machine.subject, participant)))
    for t in machine.transitions:
      for mentioned in sorted(t.label.participants()):
        if mentioned not in machines:
          violations.append(errors.Violation(
              DANGLING_PARTICIPANT, t,
              'machine of {} mentions {}, which is not in the system'.format(
                  participant, mentioned)))
  if violations:
    raise errors.SystemValidationError(violations)
  return System(name, machines)


def sequential_participants(system):
  """Participants whose machine is sequential, sorted."""
  return tuple(p for p in system.participants
               if cfsm_lib.is_sequential(system[p]))
