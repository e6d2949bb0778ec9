#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "aztec/comb.hpp"
#include "aztec/enumerate.hpp"
#include "aztec/errors.hpp"
#include "aztec/lgv.hpp"
#include "aztec/render.hpp"
#include "aztec/tiling.hpp"

namespace aztec::cli {

namespace {

// Reported on the exit status of a failed check, as opposed to bad input.
constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

struct Options {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string input;
  std::string output;
  std::string style = "paths";
  int convention = 0;
  std::size_t cap = kDefaultEnumerationCap;
  std::string stages;
  std::string direction = "to-tiling";
  std::string stat;
  bool list = false;
  std::string bits_output;
  std::string svg;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

std::string read_input(const Options& o, const Streams& io) {
  std::ostringstream buf;
  if (o.input.empty() || o.input == "-") {
    buf << io.in.rdbuf();
  } else {
    std::ifstream file(o.input, std::ios::binary);
    if (!file) throw Error("cannot read " + o.input);
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot write " + path);
  file << text;
  if (!file.flush()) throw Error("cannot write " + path);
}

void emit(const Options& o, const Streams& io, const std::string& text) {
  if (o.output.empty() || o.output == "-") {
    io.out << text;
  } else {
    write_file(o.output, text);
  }
}

// One SVG per stage of the sweep: stage_<n>.svg is the cliff family,
// stage_<k>.svg the family after the columns n-1..k have been combed.
void write_stages(const BitTriangle& t, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const PathFamily cliff = family_from_bits(t);
  PathFamily f = cliff;
  const std::size_t n = t.order();
  write_file(dir + "/stage_" + std::to_string(n) + ".svg", render_family(f));
  for (std::size_t k = n; k-- > 0;) {
    f = comb_column(f, k);
    write_file(dir + "/stage_" + std::to_string(k) + ".svg", render_family(f, {}, &cliff));
  }
}

int cmd_sample(const Options& o, const Streams& io) {
  const BitTriangle t = sample_triangle(o.n, o.seed);
  const PathFamily f = comb(t);
  require_valid(f);
  if (!is_disjoint(f)) throw std::logic_error("sampled family is not disjoint");
  if (!o.bits_output.empty()) write_file(o.bits_output, to_text(t));
  if (!o.stages.empty()) write_stages(t, o.stages);
  if (!o.svg.empty()) write_file(o.svg, render_family(f));
  emit(o, io, to_text(f));
  return 0;
}

int cmd_comb(const Options& o, const Streams& io) {
  const BitTriangle t = bit_triangle_from_text(read_input(o, io));
  if (!o.stages.empty()) write_stages(t, o.stages);
  emit(o, io, to_text(comb(t)));
  return 0;
}

int cmd_uncomb(const Options& o, const Streams& io) {
  emit(o, io, to_text(uncomb(path_family_from_text(read_input(o, io)))));
  return 0;
}

int cmd_verify(const Options& o, const Streams& io) {
  const BijectionReport r = verify_bijection(o.n, o.cap);
  std::ostringstream text;
  text << "n = " << o.n << ": " << r.matched << "/" << r.triangles << " matched, "
       << r.disjoint_families << " disjoint families\n"
       << "comb injective: " << (r.injective ? "yes" : "no") << '\n'
       << "image equals disjoint families: " << (r.image_matches ? "yes" : "no") << '\n'
       << "uncomb after comb is the identity: " << (r.uncomb_after_comb ? "yes" : "no")
       << '\n'
       << "comb after uncomb is the identity: " << (r.comb_after_uncomb ? "yes" : "no")
       << '\n';
  for (const auto& f : r.failures) text << "failure: " << f << '\n';
  text << (r.passed() ? "PASS" : "FAIL") << '\n';
  emit(o, io, text.str());
  return r.passed() ? 0 : kCheckFailed;
}

int cmd_det(const Options& o, const Streams& io) {
  const ExactInt det = det_exact(delannoy_matrix(o.n));
  const std::size_t exponent = o.n == 0 ? 0 : o.n * (o.n - 1) / 2;
  const ExactInt expected = ExactInt(1) << exponent;
  const bool reduction = o.n == 0 || verify_reduction(o.n);
  std::ostringstream text;
  if (det == expected) {
    text << det << " = 2^" << exponent << '\n';
  } else {
    text << det << " != 2^" << exponent << '\n';
  }
  text << "reduction E^T A E = diag(1, 2 A): " << (reduction ? "holds" : "fails") << '\n';
  emit(o, io, text.str());
  return det == expected && reduction ? 0 : kCheckFailed;
}

int cmd_enumerate(const Options& o, const Streams& io) {
  std::ostringstream text;
  if (!o.stat.empty()) {
    Statistic s;
    if (!parse_statistic(o.stat, s)) throw Error("unknown statistic " + o.stat);
    text << format_histogram(joint_distribution(o.n, s, o.cap));
  } else {
    const auto families = enumerate_disjoint(o.n, o.cap);
    if (o.list) {
      for (std::size_t k = 0; k < families.size(); ++k) {
        text << (k ? "\n" : "") << to_text(families[k]);
      }
    } else {
      text << families.size() << '\n';
    }
  }
  emit(o, io, text.str());
  return 0;
}

std::string edge_paths_text(const EdgePathFamily& p) {
  std::ostringstream text;
  for (const auto& path : p.paths) {
    for (std::size_t k = 0; k < path.edges.size(); ++k) {
      text << (k ? "  " : "") << path.edges[k].row << ' ' << path.edges[k].col;
    }
    text << '\n';
  }
  return text.str();
}

int cmd_tile(const Options& o, const Streams& io) {
  const std::string input = read_input(o, io);
  if (o.direction == "to-tiling") {
    emit(o, io, to_text(family_to_tiling(path_family_from_text(input))));
  } else if (o.direction == "to-family") {
    emit(o, io, to_text(tiling_to_family(tiling_from_text(input))));
  } else {
    const DominoTiling t = tiling_from_text(input);
    emit(o, io, edge_paths_text(extract_paths(t.covered_region(), t,
                                              static_cast<Convention>(o.convention))));
  }
  return 0;
}

int cmd_render(const Options& o, const Streams& io) {
  RenderStyle style;
  if (!parse_render_style(o.style, style)) throw Error("unknown style " + o.style);
  const std::string input = read_input(o, io);
  switch (style) {
    case RenderStyle::Paths:
      emit(o, io, render_family(path_family_from_text(input)));
      break;
    case RenderStyle::Dual:
      emit(o, io, render_dual(path_family_from_text(input)));
      break;
    case RenderStyle::Tiling:
      emit(o, io, render_tiling(tiling_from_text(input), false));
      break;
    case RenderStyle::Overlay:
      emit(o, io, render_tiling(tiling_from_text(input), true));
      break;
  }
  return 0;
}

const char* error_name(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const NotDisjoint*>(&e)) return "NotDisjoint";
  if (dynamic_cast<const InvalidEdgeFamily*>(&e)) return "InvalidEdgeFamily";
  if (dynamic_cast<const InvalidFamily*>(&e)) return "InvalidFamily";
  if (dynamic_cast<const MalformedPath*>(&e)) return "MalformedPath";
  if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
  if (dynamic_cast<const NotATiling*>(&e)) return "NotATiling";
  if (dynamic_cast<const PreconditionViolation*>(&e)) return "PreconditionViolation";
  return "error";
}

}  // namespace

BitTriangle sample_triangle(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  BitTriangle t(n);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) t.set_bit(i, j, (gen() >> 63) != 0);
  }
  return t;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Combing bijection between bit triangles and disjoint Schroeder families",
               "aztec"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("n,--n", o.n, "order of the families")->required();
  };
  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "input file (default: standard input)");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", o.output, "output file (default: standard output)");
  };

  auto* sample = app.add_subcommand("sample", "comb a pseudo-random bit triangle");
  add_n(sample);
  sample->add_option("--seed", o.seed, "mt19937_64 seed");
  add_output(sample);
  sample->add_option("--bits-output", o.bits_output, "also write the bit triangle here");
  sample->add_option("--svg", o.svg, "also write an SVG of the family here");
  sample->add_option("--stages", o.stages, "directory for one SVG per combing stage");

  auto* comb_cmd = app.add_subcommand("comb", "bit triangle to disjoint family");
  add_io(comb_cmd);
  add_output(comb_cmd);
  comb_cmd->add_option("--stages", o.stages, "directory for one SVG per combing stage");

  auto* uncomb_cmd = app.add_subcommand("uncomb", "disjoint family to bit triangle");
  add_io(uncomb_cmd);
  add_output(uncomb_cmd);

  auto* verify = app.add_subcommand("verify", "exhaustive bijection check");
  add_n(verify);
  verify->add_option("--cap", o.cap, "largest order enumerated");
  add_output(verify);

  auto* det = app.add_subcommand("det", "determinant of the Delannoy matrix");
  add_n(det);
  add_output(det);

  auto* enumerate = app.add_subcommand("enumerate", "disjoint families of order n");
  add_n(enumerate);
  enumerate->add_option("--cap", o.cap, "largest order enumerated");
  enumerate->add_option("--stat", o.stat, "histogram of a statistic")
      ->check(CLI::IsMember({"diagonal", "horizontal", "column", "intercolumn", "row",
                             "column-intercolumn"}));
  enumerate->add_flag("--list", o.list, "print every family");
  add_output(enumerate);

  auto* tile = app.add_subcommand("tile", "convert between families and tilings");
  add_io(tile);
  add_output(tile);
  tile->add_option("--direction", o.direction)
      ->check(CLI::IsMember({"to-tiling", "to-family", "to-paths"}));
  tile->add_option("--convention", o.convention, "edge convention for to-paths")
      ->check(CLI::Range(0, 3));

  auto* render = app.add_subcommand("render", "SVG of a family or a tiling");
  add_io(render);
  add_output(render);
  render->add_option("--style", o.style)
      ->check(CLI::IsMember({"paths", "tiling", "overlay", "dual"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  const Streams io{in, out, err};
  try {
    if (*sample) return cmd_sample(o, io);
    if (*comb_cmd) return cmd_comb(o, io);
    if (*uncomb_cmd) return cmd_uncomb(o, io);
    if (*verify) return cmd_verify(o, io);
    if (*det) return cmd_det(o, io);
    if (*enumerate) return cmd_enumerate(o, io);
    if (*tile) return cmd_tile(o, io);
    if (*render) return cmd_render(o, io);
  } catch (const std::exception& e) {
    err << error_name(e) << ": " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsageError;
}

}  // namespace aztec::cli
