#include "relmech/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "relmech/errors.hpp"

namespace relmech {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string worldline_csv(const Worldline& w) {
  std::string out = "s,t,x1,x2,x3,x4,u1,u2,u3,u4,norm_residual\n";
  for (const auto& smp : w.samples) {
    out += format_double(smp.s);
    out += ',';
    out += format_double(smp.t);
    for (int i = 0; i < 4; ++i) {
      out += ',';
      out += format_double(smp.x[i]);
    }
    for (int i = 0; i < 4; ++i) {
      out += ',';
      out += format_double(smp.u[i]);
    }
    out += ',';
    out += format_double(smp.norm_residual);
    out += '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& bytes) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
}

}  // namespace relmech
