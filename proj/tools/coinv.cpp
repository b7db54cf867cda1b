#include <coinv/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  coinv::cli::CommandResult res = coinv::cli::run(args);
  std::ostream& out = res.exit_code == 0 ? std::cout : std::cerr;
  if (coinv::cli::wants_json(args) && res.exit_code != 2) out << res.payload.dump(2) << "\n";
  else out << res.text;
  return res.exit_code;
}
