/*
 * Copyright 2026 The sorpfix authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include <sorpfix/io.hpp>

int main(int argc, char** argv) {
  CLI::App app{
      "Computes least and greatest solutions of polynomial equation systems "
      "over absorptive semirings"};

  sorpfix::JobSpec spec;
  std::size_t max_steps = 0;

  const std::map<std::string, sorpfix::FixpointKind> fixpoints{
      {"least", sorpfix::FixpointKind::least}, {"greatest", sorpfix::FixpointKind::greatest}};
  const std::map<std::string, sorpfix::SolveMethod> methods{
      {"closed", sorpfix::SolveMethod::closed},
      {"symbolic", sorpfix::SolveMethod::symbolic},
      {"kleene", sorpfix::SolveMethod::kleene}};
  const std::map<std::string, sorpfix::OutputFormat> formats{
      {"json", sorpfix::OutputFormat::json}, {"text", sorpfix::OutputFormat::text}};

  app.add_option("--input", spec.input_path, "equation system document (JSON)")->required();
  app.add_option("--fixpoint", spec.fixpoint, "which solution to compute")
      ->required()
      ->transform(CLI::CheckedTransformer(fixpoints, CLI::ignore_case));
  app.add_option("--method", spec.method, "solver to use")
      ->required()
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  auto* steps_opt =
      app.add_option("--max-steps", max_steps, "iteration cap for the kleene method");
  app.add_option("--output", spec.output, "output format (default: json)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_flag("--verify", spec.verify, "cross-check the solution against the oracles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : sorpfix::kExitInputError;
  }
  if (steps_opt->count() > 0) spec.max_steps = max_steps;

  const sorpfix::JobResult result = sorpfix::run_job(spec);
  if (!result.error.empty()) std::cerr << result.error << "\n";
  if (!result.output.empty()) {
    std::cout << result.output;
    if (spec.output == sorpfix::OutputFormat::json) std::cout << "\n";
  }
  return result.exit_code;
}
