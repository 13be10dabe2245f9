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
"""Participants, messages and the action labels of CFSM transitions."""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import collections
import re

import six

_TOKEN_RE = re.compile(r"^[A-Za-z0-9_']+$")

OUTPUT = '!'
INPUT = '?'
TAU = 'tau'


def is_token(value):
  return isinstance(value, six.string_types) and bool(_TOKEN_RE.match(value))


def validate_token(value, what):
  """Checks that `value` is a valid participant or message name.

  Args:
    value: The candidate name.
    what: What the name denotes, used in the error message.

  Returns:
    `value`, unchanged.

  Raises:
    TypeError: If `value` is not a string.
    ValueError: If `value` is empty or contains characters outside
      `[A-Za-z0-9_']`.
  """
  if not isinstance(value, six.string_types):
    raise TypeError('{} must be a string, got {!r}'.format(what, value))
  if not _TOKEN_RE.match(value):
    raise ValueError(
        '{} must be a non-empty token of [A-Za-z0-9_\'], got {!r}'.format(
            what, value))
  return value


class ActionLabel(
    collections.namedtuple('ActionLabel',
                           ['kind', 'sender', 'receiver', 'msg'])):
  """Label of a CFSM transition: an output, an input or the silent action.

  Outputs `A->B!m` and inputs `A->B?m` always name both endpoints. The silent
  action stores empty strings in the endpoint and message fields, which keeps
  labels totally ordered as plain tuples.

  Use the `output`, `input` and `tau` factories rather than the constructor.
  """
  __slots__ = ()

  @classmethod
  def output(cls, sender, receiver, msg):
    return cls._communication(OUTPUT, sender, receiver, msg)

  @classmethod
  def input(cls, sender, receiver, msg):
    return cls._communication(INPUT, sender, receiver, msg)

  @classmethod
  def tau(cls):
    return _TAU_LABEL

  @classmethod
  def _communication(cls, kind, sender, receiver, msg):
    validate_token(sender, 'sender')
    validate_token(receiver, 'receiver')
    validate_token(msg, 'message')
    if sender == receiver:
      raise ValueError(
          'sender and receiver must differ, got {} twice'.format(sender))
    return cls(kind, sender, receiver, msg)

  @property
  def is_output(self):
    return self.kind == OUTPUT

  @property
  def is_input(self):
    return self.kind == INPUT

  @property
  def is_tau(self):
    return self.kind == TAU

  @property
  def subject(self):
    """The sender of an output, the receiver of an input, `None` for tau."""
    if self.is_output:
      return self.sender
    if self.is_input:
      return self.receiver
    return None

  @property
  def partner(self):
    """The endpoint that is not the subject, `None` for tau."""
    if self.is_output:
      return self.receiver
    if self.is_input:
      return self.sender
    return None

  def participants(self):
    if self.is_tau:
      return frozenset()
    return frozenset([self.sender, self.receiver])

  def dual(self):
    """Returns the matching label on the other side of a synchronisation."""
    if self.is_tau:
      return self
    kind = INPUT if self.is_output else OUTPUT
    return ActionLabel(kind, self.sender, self.receiver, self.msg)

  def __str__(self):
    if self.is_tau:
      return 'tau'
    return '{}->{}{}{}'.format(self.sender, self.receiver, self.kind, self.msg)


_TAU_LABEL = ActionLabel(TAU, '', '', '')
