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
r"""Command-line tool for communicating systems.

Usage:

  cfsm validate SYSTEM_FILE
  cfsm semantics SYSTEM_FILE [--dot=PATH] [--max-configs=N]
  cfsm check SYSTEM_FILE [--property=deadlock|lock|strong-lock|all] \
      [--json=PATH]
  cfsm compat FILE1 P1 FILE2 P2 [--certificate=PATH]
  cfsm compose FILE1 H FILE2 K [--output=PATH] [--force] [--verify-projection]
  cfsm normalize SYSTEM_FILE [--output=PATH]
  cfsm fuzz [--seed=N] [--iters=N] [--sequential] [--report=PATH] \
      [--workers=N]

Exit codes: 0 on success or when the property holds, 1 when a property is
violated, machines are incompatible or systems cannot be composed, 2 on usage,
parse and validation errors. The environment variable `CFSM_MAX_CONFIGS`
gives the default of `--max-configs`. Multi-word flags also accept underscores,
for example `--max_configs`.
"""

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os
import sys

from absl import app
from absl import flags
from absl import logging

from cfsm_composition.python.core.compatibility import compatibility
from cfsm_composition.python.core.formats import dot_export
from cfsm_composition.python.core.formats import system_format
from cfsm_composition.python.core.formats import witness_json
from cfsm_composition.python.core.fuzz import generators
from cfsm_composition.python.core.fuzz import preservation
from cfsm_composition.python.core.gateway import composition
from cfsm_composition.python.core.internal import errors
from cfsm_composition.python.core.properties import properties
from cfsm_composition.python.core.semantics import semantics

FLAGS = flags.FLAGS

MAX_CONFIGS_ENV = 'CFSM_MAX_CONFIGS'

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_ERROR = 2

ALL_PROPERTIES = 'all'

flags.DEFINE_integer(
    'max_configs', None,
    'Cap on reachable configurations. Defaults to ${} or {}.'.format(
        MAX_CONFIGS_ENV, semantics.DEFAULT_MAX_CONFIGURATIONS))
flags.DEFINE_integer('max_witnesses', properties.DEFAULT_MAX_WITNESSES,
                     'Number of witnesses reported per property.')
flags.DEFINE_enum(
    'property', ALL_PROPERTIES,
    list(properties.PropertyCheckerFactory.supported_checkers()) +
    [ALL_PROPERTIES], 'Property to check.')
flags.DEFINE_string('dot', None, 'Write the semantics as DOT to this path.')
flags.DEFINE_string('json', None, 'Write the property reports to this path.')
flags.DEFINE_string('certificate', None,
                    'Write the compatibility certificate to this path.')
flags.DEFINE_string('output', None, 'Output system file; stdout if unset.',
                    short_name='o')
flags.DEFINE_bool('force', False,
                  'Compose even if the systems are not composable.')
flags.DEFINE_bool('verify_projection', False,
                  'Check the projection lemma on the composed system.')
flags.DEFINE_integer('seed', 42, 'Seed of the fuzzing campaign.')
flags.DEFINE_integer('iters', 200, 'Number of fuzzing iterations.')
flags.DEFINE_bool('sequential', False,
                  'Generate sequential gateways when fuzzing.')
flags.DEFINE_string('report', None, 'Write the fuzzing report to this path.')
flags.DEFINE_integer('workers', 1, 'Processes used for fuzzing.')

# Dashed spellings of the multi-word flags.
for _name in ('max_configs', 'max_witnesses', 'verify_projection'):
  flags.DEFINE_alias(_name.replace('_', '-'), _name)


class UsageError(ValueError):
  pass


def _read(path):
  with open(path) as f:
    return f.read()


def _write(path, text):
  with open(path, 'w') as f:
    f.write(text)


def _emit(path, text):
  if path:
    _write(path, text)
  else:
    sys.stdout.write(text)


def _load(path):
  return system_format.parse_system_file(_read(path))


def max_configurations(default=semantics.DEFAULT_MAX_CONFIGURATIONS):
  """`--max_configs`, falling back to the environment and then `default`."""
  if FLAGS.max_configs is not None:
    return FLAGS.max_configs
  value = os.environ.get(MAX_CONFIGS_ENV)
  if not value:
    return default
  try:
    return int(value)
  except ValueError:
    raise ValueError('${} must be an integer, got {!r}'.format(
        MAX_CONFIGS_ENV, value))


def _args(argv, count, usage):
  if len(argv) != count:
    raise UsageError('usage: cfsm {}'.format(usage))
  return argv


def _validate(argv):
  path, = _args(argv, 1, 'validate SYSTEM_FILE')
  system = _load(path)
  print('{}: valid system {} with participants {}'.format(
      path, system.name, ','.join(system.participants)))
  return EXIT_OK


def _semantics(argv):
  path, = _args(argv, 1, 'semantics SYSTEM_FILE')
  system = _load(path)
  lts = semantics.build_semantics(system, max_configurations())
  print('{}: {} configurations, {} steps'.format(system.name, len(lts),
                                                 len(lts.edges)))
  if FLAGS.dot:
    _write(FLAGS.dot, dot_export.export_dot(lts, name=system.name))
  return EXIT_OK


def _describe(witness):
  text = '  {} at {}'.format(
      witness.kind, semantics.configuration_string(witness.configuration))
  if witness.participant is not None:
    text += ' for {}'.format(witness.participant)
  if isinstance(witness.evidence, properties.Run):
    text += ': ' + ' '.join(str(l) for l in witness.evidence.labels())
    if witness.evidence.is_lasso:
      text += ' (cycle)'
  return text


def _check(argv):
  path, = _args(argv, 1, 'check SYSTEM_FILE')
  system = _load(path)
  lts = semantics.build_semantics(system, max_configurations())
  if FLAGS.property == ALL_PROPERTIES:
    names = properties.PropertyCheckerFactory.supported_checkers()
  else:
    names = [FLAGS.property]

  reports = [
      properties.check_property(name, system, lts, FLAGS.max_witnesses)
      for name in names
  ]
  if FLAGS.property == ALL_PROPERTIES:
    properties.check_implication_chain(system, lts)

  for report in reports:
    if report.holds:
      print('{}: holds'.format(report.property))
    else:
      print('{}: violated ({} violations)'.format(report.property,
                                                  report.num_violations))
      for witness in report.witnesses:
        print(_describe(witness))

  if FLAGS.json:
    documents = [witness_json.report_to_dict(r) for r in reports]
    _write(FLAGS.json,
           witness_json.dumps(documents[0] if len(documents) == 1 else
                              documents))
  return EXIT_OK if all(r.holds for r in reports) else EXIT_VIOLATED


def _compat(argv):
  path1, p1, path2, p2 = _args(argv, 4, 'compat FILE1 P1 FILE2 P2')
  m1, m2 = _load(path1)[p1], _load(path2)[p2]
  result = compatibility.check_compatibility(m1, m2)
  print('{} and {}: {}'.format(
      p1, p2, 'compatible' if result.compatible else 'not compatible'))
  if FLAGS.certificate:
    _write(FLAGS.certificate,
           witness_json.dumps(witness_json.certificate_to_dict(m1, m2,
                                                               result)))
  return EXIT_OK if result.compatible else EXIT_VIOLATED


def _compose(argv):
  path1, h, path2, k = _args(argv, 4, 'compose FILE1 H FILE2 K')
  s1, s2 = _load(path1), _load(path2)
  try:
    cs = composition.compose_systems(s1, h, s2, k, force=FLAGS.force)
  except errors.CompositionError as e:
    print(str(e), file=sys.stderr)
    return EXIT_VIOLATED
  _emit(FLAGS.output,
        system_format.serialize_system(
            cs.system, header=composition.provenance_header(cs)))

  if FLAGS.verify_projection:
    lts = semantics.build_semantics(cs.system, max_configurations())
    result = composition.verify_projection_lemma(cs, lts,
                                                 max_configurations())
    for configuration, clause in result.counterexamples:
      print('projection lemma: {} fails at {}'.format(
          clause, semantics.configuration_string(configuration)),
            file=sys.stderr)
    if not result.holds:
      return EXIT_VIOLATED
  return EXIT_OK


def _normalize(argv):
  path, = _args(argv, 1, 'normalize SYSTEM_FILE')
  system = system_format.parse_symmetric_system_file(_read(path))
  _emit(FLAGS.output, system_format.serialize_system(system))
  return EXIT_OK


def _fuzz(argv):
  _args(argv, 0, 'fuzz')
  params = generators.FuzzParams(
      seed=FLAGS.seed,
      iterations=FLAGS.iters,
      require_sequential_gateways=FLAGS.sequential,
      max_configurations=max_configurations(
          default=generators.FuzzParams().max_configurations))
  report = preservation.run_preservation_fuzz(params, FLAGS.workers)
  stats = ', '.join('{}={}'.format(k, v) for k, v in report.stats.items())
  print('fuzz: {} iterations, {} violations ({})'.format(
      report.iterations, len(report.violations), stats))
  for violation in report.violations:
    print('  iteration {} (seed {}): {} not preserved'.format(
        violation.iteration, violation.seed, violation.theorem))
  if FLAGS.report:
    _write(FLAGS.report,
           witness_json.dumps(witness_json.fuzz_report_to_dict(report)))
  return EXIT_VIOLATED if report.violations else EXIT_OK


_COMMANDS = {
    'validate': _validate,
    'semantics': _semantics,
    'check': _check,
    'compat': _compat,
    'compose': _compose,
    'normalize': _normalize,
    'fuzz': _fuzz,
}


def cli_main(argv):
  """Runs a subcommand on already parsed flags.

  Args:
    argv: The program name, the subcommand and its positional arguments.

  Returns:
    The exit code.
  """
  if len(argv) < 2 or argv[1] not in _COMMANDS:
    print('usage: cfsm {{{}}} ARGS...'.format('|'.join(sorted(_COMMANDS))),
          file=sys.stderr)
    return EXIT_ERROR
  try:
    return _COMMANDS[argv[1]](argv[2:])
  except (ValueError, RuntimeError, IOError) as e:
    logging.debug('cfsm %s failed', argv[1], exc_info=True)
    print('error: {}'.format(e), file=sys.stderr)
    return EXIT_ERROR


def main(argv):
  sys.exit(cli_main(argv))


def run_main():
  app.run(main)


if __name__ == '__main__':
  run_main()
