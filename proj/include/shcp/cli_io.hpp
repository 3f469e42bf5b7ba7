// Text and file formats: the coefficient-expression parser, pair / module /
// word files (JSON), report serialization and the command-line driver.
#ifndef SHCP_CLI_IO_HPP_
#define SHCP_CLI_IO_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "equivalence.hpp"
#include "pair.hpp"
#include "representations.hpp"
#include "supergroup.hpp"

namespace shcp {

  inline constexpr char kSchema[] = "shcp/1";

  // Parse failure at a 1-based column of the source text.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t column)
        : Error("column " + std::to_string(column) + ": " + msg), message_(msg), column_(column) {}
    std::size_t column() const noexcept {
      return column_;
    }
    std::string const& message() const noexcept {
      return message_;
    }

   private:
    std::string message_;
    std::size_t column_;
  };

  // expr := term (('+'|'-') term)*; term := factor ('*' factor)*;
  // factor := INT ('/' INT)? | name | '(' expr ')' | '-' factor.  Names are the
  // generators of A (xi<k>, eps, eps<k>); with gaussian set, 'i' and a
  // trailing i on a number ("3i", "1/2i") denote the imaginary unit.
  WeilElement parse_coeff_expr(std::string_view src, AlgebraPtr const& a, bool gaussian = false);
  // Same grammar where names of basis elements of g may occur at most once
  // per term: "(xi1*xi2)*X1 + 2*xi3*Yp".  Reads the output of GPoint::to_string.
  GPoint parse_point(std::string_view src, AlgebraPtr const& a, LiePtr const& g, bool gaussian = false);

  // Comma separated tokens: kpt:<k>, kptinv:<k>, odd:<Y>:<coeff>,
  // oddgen:<g_1 point>:<coeff>, evexp:<g_0 point>[:<coeff>].
  GroupWord   parse_word(std::string_view src, ShcPair const& p, AlgebraPtr const& a);
  std::string format_word(ShcPair const& p, GroupWord const& w);

  // Reads a pair file.  Structural errors throw with the JSON path; the
  // returned issues are the validation failures of the parsed pair.
  struct PairFileResult {
    PairPtr            pair;
    std::vector<Issue> issues;
  };
  PairFileResult read_pair(std::string_view json_text);
  PairFileResult read_pair_file(std::string const& path);
  // Throws unless the pair is valid; the message lists every issue.
  PairPtr     load_pair(std::string const& path);
  std::string pair_to_json(ShcPair const& p);

  EvenModule  read_even_module(std::string_view json_text, ShcPair const& p);
  EvenModule  load_even_module(std::string const& path, ShcPair const& p);
  std::string module_to_json(ShcPair const& p, InducedModule const& v);

  struct WordFile {
    std::string pair_path;  // relative paths resolve against the word file
    std::string weil;
    std::vector<std::string> tokens;
  };
  WordFile    read_word_file(std::string const& path);
  std::string word_file_to_json(WordFile const& w);

  std::string split_to_json(SplitElement const& s);
  // Reports: JSON (timing fields optional) and plain text.
  std::string report_to_json(CheckReport const& r, bool timing);
  CheckReport report_from_json(std::string_view json_text);
  std::string report_to_text(CheckReport const& r, bool timing);

  // The shcp command line.  Exit status 0 on success, 1 when a check fails or
  // the pair is invalid, 2 on usage and input errors.
  int run_command(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace shcp

#endif  // SHCP_CLI_IO_HPP_
