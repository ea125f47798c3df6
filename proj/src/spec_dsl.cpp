#include "skewcfc/spec_dsl.hpp"

#include "skewcfc/errors.hpp"

#include <cctype>

namespace skewcfc {

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (std::isspace(static_cast<unsigned char>(text[i])))
                continue;
            chars_.push_back(text[i]);
            origin_.push_back(i);
        }
        origin_.push_back(text.size());
    }

    CfcSpec parse()
    {
        CfcSpec spec;
        if (chars_.empty())
            return spec;
        parse_term(spec);
        while (!done()) {
            expect('+');
            parse_term(spec);
        }
        return spec;
    }

private:
    std::string chars_;
    std::vector<std::size_t> origin_;
    std::size_t pos_ = 0;

    bool done() const { return pos_ >= chars_.size(); }
    char peek() const { return done() ? '\0' : chars_[pos_]; }

    [[noreturn]] void fail(const std::string& what, std::size_t at) const
    {
        throw ParseError(what, origin_[std::min(at, origin_.size() - 1)]);
    }

    void expect(char c)
    {
        if (peek() != c)
            fail(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::size_t number(const char* what)
    {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            fail(std::string("expected ") + what, start);
        if (pos_ - start > 9)
            fail(std::string(what) + " too large", start);
        return std::stoul(chars_.substr(start, pos_ - start));
    }

    void parse_term(CfcSpec& spec)
    {
        const std::size_t term_start = pos_;
        BlockKind kind;
        switch (peek()) {
        case 'J': kind = BlockKind::Type0; break;
        case 'G': kind = BlockKind::TypeI; break;
        case 'H': kind = BlockKind::TypeII; break;
        default: fail("expected block letter J, G or H", pos_);
        }
        ++pos_;
        const std::size_t size = number("block size");

        GaussianRational mu;
        bool has_mu = false;
        const std::size_t mu_at = pos_;
        if (peek() == '(') {
            const std::size_t open = pos_++;
            const std::size_t close = chars_.find(')', pos_);
            if (close == std::string::npos)
                fail("unclosed '('", open);
            try {
                mu = parse_gaussian(std::string_view(chars_).substr(pos_, close - pos_));
            }
            catch (const ParseError& e) {
                fail(std::string("bad mu literal: ") + e.what(), pos_ + e.position());
            }
            has_mu = true;
            pos_ = close + 1;
        }
        if (kind == BlockKind::TypeII && !has_mu)
            fail("H block needs a parameter, e.g. H4(2)", mu_at);
        if (kind != BlockKind::TypeII && has_mu)
            fail("only H blocks take a parameter", mu_at);

        std::size_t count = 1;
        if (peek() == '*') {
            ++pos_;
            const std::size_t at = pos_;
            count = number("repeat count");
            if (count == 0)
                fail("repeat count must be at least 1", at);
        }

        Block b{kind, size, mu};
        try {
            b = validate(b);
        }
        catch (const InvalidBlock& e) {
            throw InvalidBlock(std::string(e.what()) + " (term at position " + std::to_string(origin_[term_start]) +
                               ")");
        }
        spec.blocks.insert(spec.blocks.end(), count, b);
    }
};

} // namespace

CfcSpec parse_spec(std::string_view text)
{
    return SpecParser(text).parse();
}

std::string format_spec(const CfcSpec& spec)
{
    std::string out;
    for (std::size_t i = 0; i < spec.blocks.size();) {
        std::size_t j = i;
        while (j < spec.blocks.size() && spec.blocks[j] == spec.blocks[i])
            ++j;
        if (!out.empty())
            out += " + ";
        out += spec.blocks[i].to_string();
        if (j - i > 1)
            out += "*" + std::to_string(j - i);
        i = j;
    }
    return out;
}

} // namespace skewcfc
