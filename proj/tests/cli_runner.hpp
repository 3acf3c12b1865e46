#pragma once

// Runs the ascon CLI binary as a subprocess and captures its streams.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "ascon/codec.hpp"

namespace cli_runner {

namespace fs = std::filesystem;

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class Sandbox {
public:
  Sandbox() {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("ascon-cli-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  ~Sandbox() {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
  Sandbox(const Sandbox&) = delete;
  Sandbox& operator=(const Sandbox&) = delete;

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, ascon::ByteView data) const {
    std::ofstream out(path(name), std::ios::binary);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    return path(name);
  }

  std::string write_text(const std::string& name, const std::string& text) const {
    std::ofstream out(path(name), std::ios::binary);
    out << text;
    return path(name);
  }

  ascon::Bytes read(const std::string& name) const {
    std::ifstream in(path(name), std::ios::binary);
    return ascon::Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }

  bool exists(const std::string& name) const { return fs::exists(path(name)); }

  Result run(const std::vector<std::string>& args) const {
    std::string cmd = quote(ASCON_CLI_PATH);
    for (const auto& a : args) cmd += " " + quote(a);
    const std::string out = path(".stdout"), err = path(".stderr");
    cmd += " >" + quote(out) + " 2>" + quote(err);
    const int status = std::system(cmd.c_str());
    Result r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

private:
  static std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) {
      if (c == '\'') q += "'\\''";
      else q += c;
    }
    return q + "'";
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }

  fs::path dir_;
};

}  // namespace cli_runner
