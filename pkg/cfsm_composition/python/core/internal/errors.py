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
"""Exception types raised by the CFSM composition library.

All domain errors derive from `ValueError`, so callers that only care about
"bad input" can keep catching `ValueError`. Errors that describe several
problems at once carry them in a `violations` list.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections


class Violation(
    collections.namedtuple('Violation', ['kind', 'transition', 'message'])):
  """A single well-formedness problem.

  Attributes:
    kind: Short machine-readable identifier, e.g. `'non-local-label'`.
    transition: The offending `Transition`, or `None` when the problem is not
      tied to one transition.
    message: Human readable description.
  """
  __slots__ = ()

  def __str__(self):
    if self.transition is None:
      return '{}: {}'.format(self.kind, self.message)
    return '{}: {} [{}]'.format(self.kind, self.message, self.transition)


class _ViolationsError(ValueError):
  """Base class for errors that aggregate `Violation`s."""

  def __init__(self, violations, prefix):
    self.violations = list(violations)
    lines = [prefix] + ['  ' + str(v) for v in self.violations]
    super(_ViolationsError, self).__init__('\n'.join(lines))

  @property
  def kinds(self):
    return sorted(set(v.kind for v in self.violations))


class CfsmValidationError(_ViolationsError):
  """Raised when an FSA is not a well-formed CFSM."""

  def __init__(self, subject, violations):
    self.subject = subject
    super(CfsmValidationError, self).__init__(
        violations, 'Machine of {} is not a valid CFSM:'.format(subject))


class SystemValidationError(_ViolationsError):
  """Raised when a map of machines is not a closed communicating system."""

  def __init__(self, violations):
    super(SystemValidationError, self).__init__(
        violations, 'Not a valid communicating system:')


class UnknownStateError(ValueError):
  """Raised for states or configurations that do not belong to a model."""


class UnknownParticipantError(ValueError):
  """Raised when a participant is not in the domain of a system."""


class StateExplosionError(RuntimeError):
  """Raised when semantics construction exceeds its configuration cap."""

  def __init__(self, limit):
    self.limit = limit
    super(StateExplosionError, self).__init__(
        'More than {} reachable configurations; raise the cap with '
        '`max_configurations` to explore further.'.format(limit))


class CompositionError(ValueError):
  """Raised when two systems cannot be composed through gateways."""

  def __init__(self, kind, message):
    self.kind = kind
    super(CompositionError, self).__init__('{}: {}'.format(kind, message))


class ParseError(ValueError):
  """Raised for malformed or invalid system files.

  Attributes:
    line: 1-based line number of the offending token.
    column: 1-based column number of the offending token.
    violations: Validation problems found in a syntactically valid file.
    locations: `(line, column)` of each violation, in the same order.
  """

  def __init__(self, message, line, column, violations=(), locations=None):
    self.line = line
    self.column = column
    self.violations = list(violations)
    if locations is None:
      locations = [(line, column)] * len(self.violations)
    if len(locations) != len(self.violations):
      raise ValueError('locations must match violations, got {} and {}'.format(
          len(locations), len(self.violations)))
    self.locations = list(locations)
    text = '{}:{}: {}'.format(line, column, message)
    for (l, c), v in zip(self.locations, self.violations):
      text += '\n  {}:{}: {}'.format(l, c, v)
    super(ParseError, self).__init__(text)


class InternalInconsistencyError(AssertionError):
  """Signals a bug in a checker, never a property of the checked model."""
