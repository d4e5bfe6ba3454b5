#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "slicecomp/automaton.hpp"

namespace slicecomp
{
  /// \brief Line-oriented text format for automata (".oaf").
  ///
  ///     # comment
  ///     alphabet: p !p
  ///     states: 2
  ///     init: 0
  ///     acc: buchi 1            (or: acc: parity 0=2 1=1)
  ///     trans:
  ///     0 p 0
  ///     0 p 1
  ///
  /// Sections may appear in any order, each once; transition lines follow
  /// the `trans:` header (a transition may also share its line).  Symbols are
  /// arbitrary non-whitespace tokens.
  enum class OafErrorKind
  {
    syntax,
    unknown_symbol,
    state_out_of_range,
    missing_section,
    duplicate_section,
    unassigned_priority,
  };

  const char* to_string(OafErrorKind kind);

  class OafError : public std::runtime_error
  {
  public:
    OafError(OafErrorKind kind, std::size_t line, const std::string& what);

    OafErrorKind kind() const { return kind_; }
    /// 1-based; 0 when the error is not tied to a line (missing section).
    std::size_t line() const { return line_; }

  private:
    OafErrorKind kind_;
    std::size_t line_;
  };

  Automaton parse_oaf(std::string_view text);

  /// Canonical text: sections in fixed order, transitions sorted by
  /// (source, symbol index, target), single spaces, trailing newline.
  /// State labels, when present, are written as leading comments.
  std::string emit_oaf(const Automaton& a);

  Automaton read_oaf_file(const std::filesystem::path& path);
  void write_oaf_file(const std::filesystem::path& path, const Automaton& a);
}
