/*
 * Copyright (C) 2026 The Pattern Lock Toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patternlock/enumeration.h"
#include "patternlock/features.h"
#include "patternlock/guessing.h"
#include "patternlock/reachability.h"
#include "patternlock/report.h"
#include "patternlock/service.h"

using namespace patternlock;

namespace {

StudyService* gService = nullptr;

void onSignal(int) {
    if (gService) gService->stop();
}

IntersectionRule parseRule(const std::string& name) {
    auto r = intersectionRuleFromString(name);
    if (!r) throw CLI::ValidationError("--rule", "expected strict, touch or collinear");
    return *r;
}

KnightRule parseKnights(const std::string& name) {
    auto r = knightRuleFromString(name);
    if (!r) throw CLI::ValidationError("--knights", "expected sqrt5 or non-simple");
    return *r;
}

std::optional<Policy> parseGroup(const std::string& name) {
    if (name.empty()) return std::nullopt;
    auto p = policyFromString(name);
    if (!p) throw CLI::ValidationError("--group", "unknown group '" + name + "'");
    return p;
}

std::vector<Pattern> loadPatterns(const std::string& path, const std::string& group) {
    std::vector<Pattern> out;
    for (const auto& g : loadPatternGroups(path, parseGroup(group))) {
        out.insert(out.end(), g.patterns.begin(), g.patterns.end());
    }
    if (out.empty()) throw std::runtime_error("no patterns in " + path);
    return out;
}

int runEnumerate(const std::string& output, int threads) {
    const auto all = enumerateAll(threads);
    if (!output.empty()) {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot write " + output);
        for (const Pattern& p : all) out << p.digits() << '\n';
    }
    std::map<int, uint64_t> byLength;
    for (const Pattern& p : all) byLength[p.size()]++;
    std::cout << "length,count\n";
    for (const auto& [len, n] : byLength) std::cout << len << ',' << n << '\n';
    std::cout << "total," << all.size() << '\n';
    return 0;
}

int runTheory(const std::string& featureName, const std::string& ruleName, const std::string& knightName,
              bool witnesses) {
    const auto feature = featureFromString(featureName);
    if (!feature) throw CLI::ValidationError("--feature", "unknown feature '" + featureName + "'");
    const FeatureRules rules{parseRule(ruleName), parseKnights(knightName)};
    if (*feature == Feature::StrokeLength) {
        std::vector<double> values;
        for (const Pattern& p : patternSpace()) values.push_back(computeFeatures(p).strokeLength());
        const auto s = summarize(values);
        std::printf("statistic,value\nmean,%.4f\nstddev,%.4f\nmedian,%.4f\ncount,%zu\n", s.mean, s.stddev, s.median,
                    s.n);
        return 0;
    }
    const auto h = theoryDistribution(*feature, rules);
    writeHistogramCsv(std::cout, h);
    if (witnesses) {
        std::cout << "\nvalue,first_pattern\n";
        for (const auto& [value, count] : h.bins) {
            std::cout << value << ',' << extremalWitness(*feature, value, rules)->digits() << '\n';
        }
    }
    return 0;
}

int runAnalyze(const std::string& input, const std::string& group, const std::string& stdName,
               const std::string& ruleName, const std::string& knightName, const std::string& normalization,
               bool noTheory) {
    ReportOptions opts;
    opts.aggregate.stdConvention = stdName == "population" ? StdConvention::Population : StdConvention::Sample;
    opts.aggregate.rules = {parseRule(ruleName), parseKnights(knightName)};
    opts.normalization = normalization == "ratio" ? TimeNormalization::RatioOfMeans : TimeNormalization::PerPattern;
    opts.includeTheory = !noTheory;
    writeDatasetReport(std::cout, loadPatternGroups(input, parseGroup(group)), opts);
    return 0;
}

MarkovOptions markovOptions(int ngram, double alpha, bool endSymbol) {
    return MarkovOptions{ngram, alpha, endSymbol};
}

int runGuess(const std::string& trainPath, const std::string& testPath, const std::string& group, int ngram,
             double alpha, size_t budget, bool endSymbol, size_t show) {
    const auto train = loadPatterns(trainPath, "");
    const auto model = fitMarkov(train, markovOptions(ngram, alpha, endSymbol));
    const auto top = topGuesses(model, std::max(budget, show));
    std::cout << "train_size,test_group,ngram,alpha,budget,cracked,test_size,cracked_pct\n";
    for (const auto& g : loadPatternGroups(testPath, parseGroup(group))) {
        const auto r = simulateAttack(top, g.patterns, budget);
        std::printf("%zu,%s,%d,%g,%zu,%zu,%zu,%.2f\n", train.size(), g.name.c_str(), ngram, alpha, budget,
                    r.crackedCount, r.testSize, 100.0 * r.crackedFraction);
    }
    if (show > 0) {
        std::cout << "\nrank,pattern,log_probability\n";
        for (size_t i = 0; i < std::min(show, top.size()); ++i) {
            std::printf("%zu,%s,%.6f\n", i + 1, top[i].pattern.digits().c_str(), top[i].logProbability);
        }
    }
    return 0;
}

int runCrossval(const std::string& input, const std::string& group, int folds, int repeats, uint64_t seed,
                int ngram, double alpha, size_t budget, bool endSymbol) {
    CrossValidationConfig cfg;
    cfg.folds = folds;
    cfg.repeats = repeats;
    cfg.seed = seed;
    cfg.budget = budget;
    cfg.model = markovOptions(ngram, alpha, endSymbol);
    std::cout << "group,patterns,folds,repeats,seed,ngram,alpha,budget,mean_cracked_pct\n";
    for (const auto& g : loadPatternGroups(input, parseGroup(group))) {
        const auto r = crossValidate(g.patterns, cfg);
        std::printf("%s,%zu,%d,%d,%llu,%d,%g,%zu,%.2f\n", g.name.c_str(), g.patterns.size(), folds, repeats,
                    static_cast<unsigned long long>(seed), ngram, alpha, budget, 100.0 * r.meanCrackedFraction);
    }
    return 0;
}

int runReachability(const std::string& exportPath, int current, const std::vector<int>& connected) {
    if (!exportPath.empty()) {
        std::ofstream out(exportPath);
        if (!out) throw std::runtime_error("cannot write " + exportPath);
        const auto table = exportTransitionTable();
        writeTransitionTable(out, table);
        std::cerr << "wrote " << table.size() << " entries to " << exportPath << '\n';
    }
    if (current != 0) {
        DotSet conn;
        for (int l : connected) conn.insert(Dot(l));
        conn.insert(Dot(current));
        const ReachabilityState state{Dot(current), conn};
        std::cout << transitionRecordJson({state, reachable(state)}) << '\n';
    }
    if (exportPath.empty() && current == 0) throw CLI::ValidationError("reachability", "give --export or --current");
    return 0;
}

int runServe(const std::string& host, int port, const std::string& logPath, uint64_t seed) {
    SessionManager sessions(seed, logPath);
    StudyService service(sessions);
    service.bind(host, port);
    gService = &service;
    std::signal(SIGINT, onSignal);
    std::signal(SIGTERM, onSignal);
    std::cerr << "listening on " << host << ':' << port << ", log " << logPath << '\n';
    service.listen();
    gService = nullptr;
    return 0;
}

int runValidate(const std::string& digits) {
    const auto parsed = parsePattern(digits);
    if (!parsed) {
        std::cout << "invalid: not a string of digits 1-9\n";
        return 1;
    }
    if (const auto* err = std::get_if<ValidationError>(&*parsed)) {
        std::cout << "invalid: " << toString(err->rule) << " at position " << err->position << ": " << err->message
                  << '\n';
        return 1;
    }
    const Pattern& p = std::get<Pattern>(*parsed);
    const auto f = computeFeatures(p);
    std::cout << "valid: " << p.digits() << '\n';
    std::printf("length %d\nstroke %.4f (%d + %d*sqrt2 + %d*sqrt5)\nknight moves %d\noverlaps %d\n"
                "direction changes %d\nintersections %d\n",
                f.length, f.strokeLength(), f.stroke.units(), f.stroke.sqrt2Coefficient(),
                f.stroke.sqrt5Coefficient(), f.knightMoves, f.overlaps, f.directionChanges, f.intersections);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Analysis and study tools for 3x3 unlock patterns"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate every valid pattern");
    std::string enumOutput;
    int threads = 1;
    enumerate->add_option("--output,-o", enumOutput, "Write the patterns, one per line");
    enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 9));

    auto* theory = app.add_subcommand("theory", "Full-space distribution of a feature");
    std::string featureName, ruleName = "strict", knightName = "sqrt5";
    bool witnesses = false;
    theory->add_option("--feature,-f", featureName, "length, stroke, knight, overlap, direction-changes, intersections")
            ->required();
    theory->add_option("--rule", ruleName, "Intersection rule: strict, touch, collinear");
    theory->add_option("--knights", knightName, "Knight-move counting: sqrt5 or non-simple");
    theory->add_flag("--witnesses", witnesses, "Print the first pattern of each bin");

    auto* analyze = app.add_subcommand("analyze", "Characteristics report for a session log or pattern list");
    std::string input, group, stdName = "sample", normalization = "per-pattern";
    bool noTheory = false;
    analyze->add_option("--input,-i", input, "Session log (JSON lines or CSV) or digit list")->required();
    analyze->add_option("--group,-g", group, "Restrict to one group");
    analyze->add_option("--std", stdName, "Standard deviation: sample or population")
            ->check(CLI::IsMember({"sample", "population"}));
    analyze->add_option("--rule", ruleName, "Intersection rule: strict, touch, collinear");
    analyze->add_option("--knights", knightName, "Knight-move counting: sqrt5 or non-simple");
    analyze->add_option("--normalization", normalization, "Creation time normalization: per-pattern or ratio")
            ->check(CLI::IsMember({"per-pattern", "ratio"}));
    analyze->add_flag("--no-theory", noTheory, "Skip the full-space column");

    auto* guess = app.add_subcommand("guess", "Markov guessing attack");
    std::string trainPath, testPath;
    int ngram = 2;
    double alpha = 1.0;
    size_t budget = kAndroidGuessBudget, show = 0;
    bool endSymbol = false;
    guess->add_option("--train", trainPath, "Training patterns")->required();
    guess->add_option("--test", testPath, "Test patterns")->required();
    guess->add_option("--group,-g", group, "Restrict the test set to one group");
    guess->add_option("--ngram,-n", ngram, "Model order (2 or 3)")->check(CLI::IsMember({2, 3}));
    guess->add_option("--alpha", alpha, "Laplace smoothing constant")->check(CLI::PositiveNumber);
    guess->add_option("--budget", budget, "Guesses allowed")->check(CLI::PositiveNumber);
    guess->add_option("--show", show, "Print the top guesses");
    guess->add_flag("--end-symbol", endSymbol, "Model pattern termination explicitly");

    auto* crossval = app.add_subcommand("crossval", "k-fold cross-validated guessing");
    int folds = 10, repeats = 10;
    uint64_t seed = 0;
    crossval->add_option("--input,-i", input, "Patterns or session log")->required();
    crossval->add_option("--group,-g", group, "Restrict to one group");
    crossval->add_option("--folds", folds, "Folds")->check(CLI::Range(2, 1000));
    crossval->add_option("--repeats", repeats, "Repeats")->check(CLI::Range(1, 1000));
    crossval->add_option("--seed", seed, "Shuffle seed");
    crossval->add_option("--ngram,-n", ngram, "Model order (2 or 3)")->check(CLI::IsMember({2, 3}));
    crossval->add_option("--alpha", alpha, "Laplace smoothing constant")->check(CLI::PositiveNumber);
    crossval->add_option("--budget", budget, "Guesses allowed")->check(CLI::PositiveNumber);
    crossval->add_flag("--end-symbol", endSymbol, "Model pattern termination explicitly");

    auto* reach = app.add_subcommand("reachability", "Transition table export and lookups");
    std::string exportPath;
    int current = 0;
    std::vector<int> connected;
    reach->add_option("--export", exportPath, "Write the transition table as JSON");
    reach->add_option("--current", current, "Current dot")->check(CLI::Range(1, 9));
    reach->add_option("--connected", connected, "Connected dots")->delimiter(',')->check(CLI::Range(1, 9));

    auto* serve = app.add_subcommand("serve", "Run the study service");
    std::string host = "127.0.0.1", logPath = "sessions.jsonl";
    int port = 8080;
    uint64_t serveSeed = 1;
    serve->add_option("--port,-p", port, "TCP port")->check(CLI::Range(1, 65535));
    serve->add_option("--host", host, "Bind address");
    serve->add_option("--log", logPath, "Session log path");
    serve->add_option("--seed", serveSeed, "Master seed for mandated dots");

    auto* validate = app.add_subcommand("validate", "Check a pattern and print its features");
    std::string digits;
    validate->add_option("digits", digits, "Pattern as digits 1-9")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate) return runEnumerate(enumOutput, threads);
        if (*theory) return runTheory(featureName, ruleName, knightName, witnesses);
        if (*analyze) return runAnalyze(input, group, stdName, ruleName, knightName, normalization, noTheory);
        if (*guess) return runGuess(trainPath, testPath, group, ngram, alpha, budget, endSymbol, show);
        if (*crossval) return runCrossval(input, group, folds, repeats, seed, ngram, alpha, budget, endSymbol);
        if (*reach) return runReachability(exportPath, current, connected);
        if (*serve) return runServe(host, port, logPath, serveSeed);
        if (*validate) return runValidate(digits);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
