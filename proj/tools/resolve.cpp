// Copyright 2026 The Centering Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// resolve <files...> [--rules FILE] [--trace] [--report text|structured] [--check]

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "centering/centering.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Resolve stressed and unstressed pronouns in annotated discourse"};
  std::vector<std::string> files;
  std::vector<std::string> rule_files;
  bool trace = false;
  bool check = false;
  std::string format = "text";
  app.add_option("files", files, "Discourse documents")->required()->check(CLI::ExistingFile);
  app.add_option("--rules", rule_files, "Additional rule file")->check(CLI::ExistingFile);
  app.add_flag("--trace", trace, "Include context snapshots after each utterance");
  app.add_option("--report", format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--check", check, "Exit nonzero when an expectation fails");
  CLI11_PARSE(app, argc, argv);

  centering::RuleSet extra;
  try {
    for (const std::string &f : rule_files) {
      extra.Merge(centering::parse_rules(centering::ReadFile(f)));
    }
  } catch (const centering::Error &e) {
    std::cerr << "rules: " << e.what() << "\n";
    return 2;
  }

  bool all_passed = true;
  bool failed_to_load = false;
  for (const std::string &path : files) {
    try {
      centering::DiscourseDocument doc =
          centering::parse_document(centering::ReadFile(path));
      std::string dir = std::filesystem::path(path).parent_path().string();
      centering::RuleSet rules = centering::LoadRules(doc, dir);
      rules.Merge(extra);
      centering::Report report = centering::run(doc, rules);
      if (format == "structured") {
        std::cout << centering::render_structured(report);
      } else {
        centering::RenderOptions opts;
        opts.snapshots = trace;
        std::cout << centering::render_text(report, opts);
      }
      all_passed = all_passed && report.passed();
    } catch (const centering::Error &e) {
      std::cerr << path << ": " << e.what() << "\n";
      failed_to_load = true;
    }
  }
  if (failed_to_load) return 2;
  return check && !all_passed ? 1 : 0;
}
