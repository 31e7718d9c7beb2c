#include "burau4/search.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace burau4
{

std::string to_string(Alphabet a)
{
    return a == Alphabet::AB ? "AB" : "A3B3";
}

Alphabet parse_alphabet(const std::string &text)
{
    if (text == "AB")
        return Alphabet::AB;
    if (text == "A3B3")
        return Alphabet::A3B3;
    throw std::invalid_argument("alphabet must be AB or A3B3, got '" + text + "'");
}

unsigned syllable_cap(Alphabet a)
{
    return a == Alphabet::AB ? 12 : 6;
}

void SearchConfig::validate() const
{
    if (max_syllables < 1)
        throw std::invalid_argument("max_syllables must be at least 1");
    if (max_syllables > syllable_cap(alphabet))
        throw std::invalid_argument("max_syllables " + std::to_string(max_syllables) + " exceeds the cap of " +
                                    std::to_string(syllable_cap(alphabet)) + " for alphabet " + to_string(alphabet));
    if (parallelism < 1)
        throw std::invalid_argument("parallelism must be at least 1");
}

bool SearchReport::certification_ok() const
{
    return outcome.schedule_violations == 0 && outcome.issues.empty() &&
           outcome.certificates_issued == outcome.eligible;
}

std::size_t reduced_word_count(unsigned k)
{
    if (k == 0)
        return 1;
    std::size_t n = 4;
    for (unsigned i = 1; i < k; ++i)
        n *= 3;
    return n;
}

namespace
{

constexpr int inverse_letter(int l)
{
    return l ^ 1;
}

class Searcher
{
public:
    explicit Searcher(const SearchConfig &config) : config_(config), ctx_(config.modulus)
    {
        exponent_ = config.alphabet == Alphabet::AB ? 1 : 3;
        const auto &k = constants_for(ctx_);
        letters_ = {mat_pow(k.A, exponent_), mat_pow(k.A, -exponent_), mat_pow(k.B, exponent_),
                    mat_pow(k.B, -exponent_)};
    }

    SearchOutcome single(int letter)
    {
        SearchOutcome out = fresh();
        std::vector<int> word{letter};
        examine(out, word, letters_[letter]);
        return out;
    }

    SearchOutcome subtree(int first, int second)
    {
        SearchOutcome out = fresh();
        std::vector<int> word{first, second};
        visit(out, word, letters_[first] * letters_[second]);
        return out;
    }

private:
    SearchOutcome fresh() const
    {
        SearchOutcome out;
        out.words_by_length.assign(config_.max_syllables, 0);
        return out;
    }

    void visit(SearchOutcome &out, std::vector<int> &word, const Mat3 &m)
    {
        examine(out, word, m);
        if (word.size() >= config_.max_syllables)
            return;
        for (int l = 0; l < 4; ++l)
        {
            if (l == inverse_letter(word.back()))
                continue;
            word.push_back(l);
            visit(out, word, m * letters_[l]);
            word.pop_back();
        }
    }

    WordAB to_word(const std::vector<int> &word) const
    {
        std::vector<Syllable> s;
        s.reserve(word.size());
        for (int l : word)
            s.push_back({l < 2 ? Letter::A : Letter::B, (l % 2 == 0) ? exponent_ : -exponent_});
        return WordAB(s);
    }

    void examine(SearchOutcome &out, const std::vector<int> &word, const Mat3 &m)
    {
        ++out.words_examined;
        ++out.words_by_length[word.size() - 1];
        if (is_identity(m))
            out.identity_hits.push_back({to_string(to_word(word)), m});
        if (config_.alphabet == Alphabet::A3B3)
            certify_word(out, to_word(word));
    }

    void certify_word(SearchOutcome &out, const WordAB &w)
    {
        Conjugated conj;
        try
        {
            conj = conjugate_to_B_neg_suffix(w);
        }
        catch (const NoNegativeBSyllable &)
        {
            return;
        }
        ++out.eligible;
        const NormalForm nf = to_normal_form(conj.word);
        if (!theorem_conditions(nf))
        {
            out.issues.push_back({to_string(w), "normal form " + to_string(nf) + " fails the exponent conditions"});
            return;
        }
        try
        {
            Certificate cert = certify(nf, ctx_);
            if (!cert.verdict)
            {
                out.issues.push_back({to_string(w), "certificate verdict false"});
                return;
            }
            ++out.certificates_issued;
            if (config_.keep_certificates)
                out.certificates.push_back(std::move(cert));
        }
        catch (const ScheduleViolation &e)
        {
            ++out.schedule_violations;
            out.issues.push_back({to_string(w), e.what()});
        }
    }

    SearchConfig config_;
    ModulusContext ctx_;
    long exponent_ = 1;
    std::array<Mat3, 4> letters_;
};

void merge_into(SearchOutcome &acc, SearchOutcome &&part)
{
    acc.words_examined += part.words_examined;
    for (std::size_t i = 0; i < acc.words_by_length.size(); ++i)
        acc.words_by_length[i] += part.words_by_length[i];
    acc.eligible += part.eligible;
    acc.certificates_issued += part.certificates_issued;
    acc.schedule_violations += part.schedule_violations;
    std::move(part.identity_hits.begin(), part.identity_hits.end(), std::back_inserter(acc.identity_hits));
    std::move(part.issues.begin(), part.issues.end(), std::back_inserter(acc.issues));
    std::move(part.certificates.begin(), part.certificates.end(), std::back_inserter(acc.certificates));
}

} // namespace

SearchReport run_search(const SearchConfig &config)
{
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    // Tasks in depth-first order: each one-letter word, then its two-letter subtrees.
    struct Task
    {
        int first;
        int second; // -1: the one-letter word alone
    };
    std::vector<Task> tasks;
    for (int f = 0; f < 4; ++f)
    {
        tasks.push_back({f, -1});
        if (config.max_syllables >= 2)
            for (int s = 0; s < 4; ++s)
                if (s != inverse_letter(f))
                    tasks.push_back({f, s});
    }

    std::vector<SearchOutcome> parts(tasks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        Searcher searcher(config);
        for (std::size_t i = next++; i < tasks.size(); i = next++)
            parts[i] = tasks[i].second < 0 ? searcher.single(tasks[i].first)
                                           : searcher.subtree(tasks[i].first, tasks[i].second);
    };
    const unsigned n_workers = std::min<unsigned>(config.parallelism, static_cast<unsigned>(tasks.size()));
    if (n_workers <= 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < n_workers; ++w)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    SearchReport report;
    report.config = config;
    report.outcome.words_by_length.assign(config.max_syllables, 0);
    for (auto &part : parts)
        merge_into(report.outcome, std::move(part));
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace burau4
