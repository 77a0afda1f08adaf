#include <fstream>
#include <iostream>

#include "nctoric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  nctoric::CommandResult r = nctoric::run(args);
  for (const auto& [path, contents] : r.files) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << contents)) {
      r = nctoric::CommandResult{};
      r.exit = nctoric::ExitCode::InputError;
      r.error_name = "InputError";
      r.message = "cannot write '" + path + "'";
      break;
    }
  }
  std::cout << nctoric::render_stdout(r);
  std::cerr << nctoric::render_stderr(r);
  return static_cast<int>(r.exit);
}
