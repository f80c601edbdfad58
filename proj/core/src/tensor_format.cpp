#include "secant/tensor_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace secant {

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

IntMultivector read_tensor(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int dim = -1;
  int degree = -1;
  bool one_based = false;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    std::istringstream header(line);
    std::string kw_dim, kw_degree, flag;
    if (!(header >> kw_dim >> dim >> kw_degree >> degree) || kw_dim != "dim" || kw_degree != "degree")
      throw TensorFormatError(line_no, "expected header 'dim <n> degree <d> [one_based]'");
    if (header >> flag) {
      if (flag != "one_based") throw TensorFormatError(line_no, "unknown header flag '" + flag + "'");
      one_based = true;
    }
    if (header >> flag) throw TensorFormatError(line_no, "trailing text after header");
    if (dim < 1 || dim > kMaxDim || degree < 0 || degree > dim)
      throw TensorFormatError(line_no, "dimension or degree out of range");
    break;
  }
  if (dim < 0) throw TensorFormatError(line_no, "missing header");

  IntMultivector w(dim, degree);
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw TensorFormatError(line_no, "missing ':' before coefficient");

    std::istringstream lhs(line.substr(0, colon));
    std::vector<int> idx;
    int v;
    while (lhs >> v) idx.push_back(one_based ? v - 1 : v);
    if (!lhs.eof()) throw TensorFormatError(line_no, "malformed index list");
    if (static_cast<int>(idx.size()) != degree)
      throw TensorFormatError(line_no, "expected " + std::to_string(degree) + " indices");
    for (int i : idx)
      if (i < 0 || i >= dim) throw TensorFormatError(line_no, "index out of range");
    const int sign = sort_sign(idx);
    if (sign == 0) throw TensorFormatError(line_no, "repeated index");

    std::string coeff_text;
    std::istringstream rhs(line.substr(colon + 1));
    if (!(rhs >> coeff_text)) throw TensorFormatError(line_no, "missing coefficient");
    std::string extra;
    if (rhs >> extra) throw TensorFormatError(line_no, "trailing text after coefficient");
    ExactInt c;
    if (c.set_str(coeff_text, 10) != 0) throw TensorFormatError(line_no, "coefficient is not an integer");
    w.add(IndexSet(idx), sign < 0 ? ExactInt(-c) : c);
  }
  return w;
}

IntMultivector parse_tensor(const std::string& text) {
  std::istringstream in(text);
  return read_tensor(in);
}

IntMultivector load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tensor file '" + path + "'");
  return read_tensor(in);
}

std::string format_tensor(const IntMultivector& w, bool one_based) {
  std::ostringstream os;
  os << "dim " << w.dim() << " degree " << w.degree();
  if (one_based) os << " one_based";
  os << '\n';
  for (const auto& [s, c] : w.terms()) {
    bool first = true;
    for (int i : s.indices()) {
      os << (first ? "" : " ") << (one_based ? i + 1 : i);
      first = false;
    }
    os << " : " << c.get_str() << '\n';
  }
  return os.str();
}

}  // namespace secant
