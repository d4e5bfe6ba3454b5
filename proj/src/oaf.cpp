#include "slicecomp/oaf.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace slicecomp
{
  const char* to_string(OafErrorKind kind)
  {
    switch (kind)
      {
      case OafErrorKind::syntax:
        return "Syntax";
      case OafErrorKind::unknown_symbol:
        return "UnknownSymbol";
      case OafErrorKind::state_out_of_range:
        return "StateOutOfRange";
      case OafErrorKind::missing_section:
        return "MissingSection";
      case OafErrorKind::duplicate_section:
        return "DuplicateSection";
      case OafErrorKind::unassigned_priority:
        return "UnassignedPriority";
      }
    return "?";
  }

  OafError::OafError(OafErrorKind kind, std::size_t line,
                     const std::string& what)
    : std::runtime_error(std::string(to_string(kind))
                         + (line ? " at line " + std::to_string(line) : "")
                         + ": " + what),
      kind_(kind),
      line_(line)
  {
  }

  namespace
  {
    std::vector<std::string_view> split_ws(std::string_view s)
    {
      std::vector<std::string_view> out;
      std::size_t i = 0;
      while (i < s.size())
        {
          while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
          std::size_t j = i;
          while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
          if (j > i)
            out.push_back(s.substr(i, j - i));
          i = j;
        }
      return out;
    }

    std::optional<unsigned long> to_number(std::string_view tok)
    {
      unsigned long v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        return std::nullopt;
      return v;
    }

    struct Located
    {
      std::vector<std::string_view> tokens;
      std::size_t line;
    };

    class Parser
    {
    public:
      explicit Parser(std::string_view text) : text_(text) {}

      Automaton run()
      {
        scan();
        require(alphabet_, "alphabet");
        require(states_, "states");
        require(init_, "init");
        require(acc_, "acc");
        require(trans_header_, "trans");

        std::vector<std::string> alphabet;
        for (auto tok : alphabet_->tokens)
          alphabet.emplace_back(tok);
        for (std::size_t i = 0; i < alphabet.size(); ++i)
          for (std::size_t j = 0; j < i; ++j)
            if (alphabet[i] == alphabet[j])
              throw OafError(OafErrorKind::syntax, alphabet_->line,
                             "duplicate symbol '" + alphabet[i] + "'");

        if (states_->tokens.size() != 1)
          throw OafError(OafErrorKind::syntax, states_->line,
                         "expected 'states: N'");
        auto n = to_number(states_->tokens[0]);
        if (!n || *n == 0)
          throw OafError(OafErrorKind::syntax, states_->line,
                         "state count must be a positive integer");
        num_states_ = *n;

        if (init_->tokens.size() != 1)
          throw OafError(OafErrorKind::syntax, init_->line,
                         "expected 'init: i'");
        State init = state(init_->tokens[0], init_->line);

        const auto& acc = acc_->tokens;
        if (acc.empty() || (acc[0] != "buchi" && acc[0] != "parity"))
          throw OafError(OafErrorKind::syntax, acc_->line,
                         "expected 'acc: buchi ...' or 'acc: parity ...'");
        const bool parity = acc[0] == "parity";
        Automaton a(std::move(alphabet), num_states_, init,
                    parity ? AcceptanceKind::parity : AcceptanceKind::buchi);

        if (parity)
          {
            std::vector<bool> assigned(num_states_, false);
            for (std::size_t i = 1; i < acc.size(); ++i)
              {
                auto eq = acc[i].find('=');
                if (eq == std::string_view::npos)
                  throw OafError(OafErrorKind::syntax, acc_->line,
                                 "expected 'state=priority'");
                State q = state(acc[i].substr(0, eq), acc_->line);
                auto pr = to_number(acc[i].substr(eq + 1));
                if (!pr)
                  throw OafError(OafErrorKind::syntax, acc_->line,
                                 "bad priority '" + std::string(acc[i]) + "'");
                if (assigned[q])
                  throw OafError(OafErrorKind::syntax, acc_->line,
                                 "priority of state " + std::to_string(q)
                                     + " given twice");
                assigned[q] = true;
                a.set_priority(q, static_cast<unsigned>(*pr));
              }
            for (State q = 0; q < num_states_; ++q)
              if (!assigned[q])
                throw OafError(OafErrorKind::unassigned_priority, acc_->line,
                               "state " + std::to_string(q) + " has no priority");
          }
        else
          for (std::size_t i = 1; i < acc.size(); ++i)
            a.set_accepting(state(acc[i], acc_->line));

        for (const auto& t : transitions_)
          {
            if (t.tokens.size() != 3)
              throw OafError(OafErrorKind::syntax, t.line,
                             "expected 'src sym dst'");
            State src = state(t.tokens[0], t.line);
            auto sym = a.find_symbol(std::string(t.tokens[1]));
            if (!sym)
              throw OafError(OafErrorKind::unknown_symbol, t.line,
                             "symbol '" + std::string(t.tokens[1])
                                 + "' not declared");
            State dst = state(t.tokens[2], t.line);
            a.add_transition(src, *sym, dst);
          }
        return a;
      }

    private:
      void scan()
      {
        std::size_t lineno = 0;
        std::size_t pos = 0;
        while (pos <= text_.size())
          {
            auto end = text_.find('\n', pos);
            if (end == std::string_view::npos)
              end = text_.size();
            std::string_view line = text_.substr(pos, end - pos);
            pos = end + 1;
            ++lineno;

            if (auto hash = line.find('#'); hash != std::string_view::npos)
              line = line.substr(0, hash);
            auto toks = split_ws(line);
            if (toks.empty())
              continue;

            auto colon = toks[0].find(':');
            if (colon != std::string_view::npos
                && colon + 1 == toks[0].size())
              {
                section(toks[0].substr(0, colon),
                        {{toks.begin() + 1, toks.end()}, lineno});
                continue;
              }
            if (!trans_header_)
              throw OafError(OafErrorKind::syntax, lineno,
                             "unexpected line outside the trans section");
            transitions_.push_back({std::move(toks), lineno});
          }
      }

      void section(std::string_view name, Located body)
      {
        std::optional<Located>* slot = nullptr;
        if (name == "alphabet")
          slot = &alphabet_;
        else if (name == "states")
          slot = &states_;
        else if (name == "init")
          slot = &init_;
        else if (name == "acc")
          slot = &acc_;
        else if (name == "trans")
          slot = &trans_header_;
        else
          throw OafError(OafErrorKind::syntax, body.line,
                         "unknown section '" + std::string(name) + "'");
        if (*slot)
          throw OafError(OafErrorKind::duplicate_section, body.line,
                         "section '" + std::string(name) + "' repeated");
        if (slot == &trans_header_ && !body.tokens.empty())
          transitions_.push_back(body);
        *slot = std::move(body);
      }

      void require(const std::optional<Located>& sec, const char* name) const
      {
        if (!sec)
          throw OafError(OafErrorKind::missing_section, 0,
                         std::string("section '") + name + "' missing");
      }

      State state(std::string_view tok, std::size_t line) const
      {
        auto v = to_number(tok);
        if (!v)
          throw OafError(OafErrorKind::syntax, line,
                         "bad state index '" + std::string(tok) + "'");
        if (*v >= num_states_)
          throw OafError(OafErrorKind::state_out_of_range, line,
                         "state " + std::string(tok) + " out of range");
        return static_cast<State>(*v);
      }

      std::string_view text_;
      std::optional<Located> alphabet_, states_, init_, acc_, trans_header_;
      std::vector<Located> transitions_;
      std::size_t num_states_ = 0;
    };
  }

  Automaton parse_oaf(std::string_view text)
  {
    return Parser(text).run();
  }

  std::string emit_oaf(const Automaton& a)
  {
    std::ostringstream out;
    if (a.has_labels())
      for (State q = 0; q < a.num_states(); ++q)
        out << "# " << q << ": " << a.label(q) << '\n';
    out << "alphabet:";
    for (const auto& s : a.alphabet())
      out << ' ' << s;
    out << "\nstates: " << a.num_states() << "\ninit: " << a.initial()
        << "\nacc: ";
    if (a.is_buchi())
      {
        out << "buchi";
        for (State q : a.accepting_states())
          out << ' ' << q;
      }
    else
      {
        out << "parity";
        for (State q = 0; q < a.num_states(); ++q)
          out << ' ' << q << '=' << a.priority(q);
      }
    out << "\ntrans:\n";
    for (State q = 0; q < a.num_states(); ++q)
      for (Symbol s = 0; s < a.alphabet_size(); ++s)
        for (State d : a.successors(q, s))
          out << q << ' ' << a.alphabet()[s] << ' ' << d << '\n';
    return out.str();
  }

  Automaton read_oaf_file(const std::filesystem::path& path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_oaf(buf.str());
  }

  void write_oaf_file(const std::filesystem::path& path, const Automaton& a)
  {
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + path.string());
    out << emit_oaf(a);
  }
}
