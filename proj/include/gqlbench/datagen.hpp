#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gqlbench/domain.hpp"
#include "gqlbench/rng.hpp"
#include "gqlbench/words.hpp"

namespace gqlbench {

namespace detail {

// RNG stream tags. Every draw for university k comes from a stream keyed by
// (seed, tag, k, ...), so generating university k yields identical values at
// every scale factor that contains it; that is what makes the generator
// monotonic across scale factors.
enum StreamTag : std::uint64_t {
    kTagUniversity = 1,
    kTagDeptBlock = 2,
    kTagDepartment = 3,
    kTagDegrees = 4,
};

inline std::string pick_word(Rng& rng) {
    const auto& pool = word_pool();
    return pool[rng.bounded(pool.size())];
}

inline std::string person_name(Rng& rng) {
    std::string w = pick_word(rng);
    w[0] = static_cast<char>(w[0] - 'a' + 'A');
    std::string s = pick_word(rng);
    s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return w + " " + s;
}

inline std::string telephone(Rng& rng) {
    std::string t = "+";
    for (int i = 0; i < 2; ++i) t += static_cast<char>('1' + rng.bounded(9));
    t += '-';
    for (int i = 0; i < 7; ++i) t += static_cast<char>('0' + rng.bounded(10));
    return t;
}

inline std::string email(const std::string& name, Id id, Id univId) {
    std::string local;
    for (char c : name)
        if (c != ' ') local += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
    return local + std::to_string(id) + "@university" + std::to_string(univId) + ".edu";
}

inline std::string word_sequence(Rng& rng, int minWords, int maxWords) {
    int n = static_cast<int>(rng.range(minWords, maxWords));
    std::string s;
    for (int i = 0; i < n; ++i) {
        if (i) s += ' ';
        s += pick_word(rng);
    }
    return s;
}

// Departments per university, 15..25. Stratified: each block of 11
// consecutive universities sees a seeded permutation of {15..25}, which keeps
// the marginal distribution uniform while pinning the per-block total; that
// keeps total dataset size close to linear in the scale factor.
inline int department_count(std::uint64_t seed, Id univ) {
    std::array<int, 11> vals{};
    for (int i = 0; i < 11; ++i) vals[i] = 15 + i;
    Rng rng = Rng::keyed(seed, kTagDeptBlock, static_cast<std::uint64_t>(univ / 11));
    for (int i = 10; i > 0; --i)
        std::swap(vals[i], vals[rng.bounded(static_cast<std::uint64_t>(i + 1))]);
    return vals[univ % 11];
}

// Degree-granting fan-in target per generated university once sf universities
// exist. Kept strictly below the 7*sf documented maximum.
inline int degree_fill_target(int sf) { return 4 * sf - 1; }

}  // namespace detail

// Deterministic, monotonic dataset generator. Pure function of (sf, seed):
// every entity and relationship present at scale sf is present identically at
// any greater scale under the same seed.
inline Dataset generate(ScaleFactor sf, std::uint64_t seed) {
    using namespace detail;
    Dataset ds;
    ds.scaleFactor = sf.value;
    ds.seed = seed;

    const Id pool = std::max<Id>(kReferencedUniversityPool, sf.value);
    ds.universities.reserve(pool);
    for (Id u = 0; u < pool; ++u) {
        Rng rng = Rng::keyed(seed, kTagUniversity, static_cast<std::uint64_t>(u));
        ds.universities.push_back({u, "University of " + pick_word(rng) +
                                          " " + std::to_string(u)});
    }

    // Degree-from tallies across all universities generated so far.
    std::vector<int> degreeCount(static_cast<std::size_t>(pool), 0);

    Id nextDept = 0, nextFac = 0, nextGrad = 0, nextUg = 0;
    Id nextPub = 0, nextCourse = 0, nextRg = 0;

    for (Id k = 0; k < sf.value; ++k) {
        const int deptCount = department_count(seed, k);
        const std::size_t firstGradOfUniv = ds.graduateStudents.size();

        for (int dIdx = 0; dIdx < deptCount; ++dIdx) {
            Rng rng = Rng::keyed(seed, kTagDepartment, static_cast<std::uint64_t>(k),
                                 static_cast<std::uint64_t>(dIdx));
            const Id dept = nextDept++;
            ds.departments.push_back({dept, k, "Department of " + pick_word(rng)});

            const int nFull = static_cast<int>(rng.range(7, 10));
            const int nAssoc = static_cast<int>(rng.range(2, 3));
            const int nAssist = static_cast<int>(rng.range(1, 2));
            const int nLect = static_cast<int>(rng.range(0, 1));

            std::vector<Id> deptFaculty;
            auto add_faculty = [&](int n, Rank rank, int pubLo, int pubHi) {
                for (int i = 0; i < n; ++i) {
                    const Id fid = nextFac++;
                    std::string nm = person_name(rng);
                    FacultyMember f{fid, nm, email(nm, fid, k), telephone(rng),
                                    rank, dept, {}};
                    const int nPubs = static_cast<int>(rng.range(pubLo, pubHi));
                    for (int p = 0; p < nPubs; ++p) {
                        const Id pid = nextPub++;
                        ds.publications.push_back(
                            {pid, word_sequence(rng, 3, 10), word_sequence(rng, 50, 150),
                             static_cast<int>(rng.range(1990, 2020)), fid});
                        f.publications.push_back(pid);
                    }
                    deptFaculty.push_back(fid);
                    ds.faculty.push_back(std::move(f));
                }
            };
            add_faculty(nFull, Rank::FullProfessor, 10, 20);
            add_faculty(nAssoc, Rank::AssociateProfessor, 5, 15);
            add_faculty(nAssist, Rank::AssistantProfessor, 2, 10);
            add_faculty(nLect, Rank::Lecturer, 0, 5);
            const int F = static_cast<int>(deptFaculty.size());

            std::vector<Id> deptCourses;
            for (Id fid : deptFaculty) {
                const int nCourses = static_cast<int>(rng.range(1, 2));
                for (int c = 0; c < nCourses; ++c) {
                    const Id cid = nextCourse++;
                    ds.courses.push_back({cid, "Course in " + pick_word(rng), dept, fid});
                    deptCourses.push_back(cid);
                }
            }

            auto pick_courses = [&](std::vector<Id>& out) {
                const int want = static_cast<int>(
                    rng.range(2, std::min<std::int64_t>(4, static_cast<std::int64_t>(
                                                               deptCourses.size()))));
                while (static_cast<int>(out.size()) < want) {
                    Id c = deptCourses[rng.bounded(deptCourses.size())];
                    if (std::find(out.begin(), out.end(), c) == out.end())
                        out.push_back(c);
                }
            };

            const int nGrads = static_cast<int>(rng.range(3 * F, 4 * F));
            for (int i = 0; i < nGrads; ++i) {
                const Id gid = nextGrad++;
                std::string nm = person_name(rng);
                GraduateStudent g{gid,
                                  nm,
                                  email(nm, gid, k),
                                  telephone(rng),
                                  static_cast<int>(rng.range(22, 30)),
                                  static_cast<int>(rng.range(1980, 2015)),
                                  dept,
                                  /*undergraduateDegreeFrom=*/-1,
                                  deptFaculty[rng.bounded(deptFaculty.size())],
                                  {}};
                pick_courses(g.takenCourses);
                ds.graduateStudents.push_back(std::move(g));
            }

            const int nUg = static_cast<int>(rng.range(8 * F, 14 * F));
            for (int i = 0; i < nUg; ++i) {
                const Id uid = nextUg++;
                std::string nm = person_name(rng);
                UndergraduateStudent s{uid,
                                       nm,
                                       email(nm, uid, k),
                                       telephone(rng),
                                       static_cast<int>(rng.range(18, 24)),
                                       dept,
                                       {}};
                pick_courses(s.takenCourses);
                ds.undergraduateStudents.push_back(std::move(s));
            }

            const int nRg = static_cast<int>(rng.range(10, 20));
            for (int i = 0; i < nRg; ++i)
                ds.researchGroups.push_back(
                    {nextRg++, "Research Group on " + pick_word(rng), dept});
        }

        // Degree-from assignment for this university's graduate students.
        // First bring every university generated so far up to the fill target
        // for sf = k+1 (in id order), then spread the rest uniformly over the
        // whole pool subject to the same cap. Because the fill depends only on
        // universities 0..k, the assignment is identical at every larger sf.
        const int target = degree_fill_target(static_cast<int>(k) + 1);
        std::size_t s = firstGradOfUniv;
        const std::size_t end = ds.graduateStudents.size();
        for (Id j = 0; j <= k && s < end; ++j)
            while (degreeCount[static_cast<std::size_t>(j)] < target && s < end) {
                ds.graduateStudents[s++].undergraduateDegreeFrom = j;
                ++degreeCount[static_cast<std::size_t>(j)];
            }
        Rng drng = Rng::keyed(seed, kTagDegrees, static_cast<std::uint64_t>(k));
        for (; s < end; ++s) {
            Id t = static_cast<Id>(drng.bounded(static_cast<std::uint64_t>(pool)));
            for (int tries = 0; degreeCount[static_cast<std::size_t>(t)] >= target &&
                                tries < 64; ++tries)
                t = static_cast<Id>(drng.bounded(static_cast<std::uint64_t>(pool)));
            while (degreeCount[static_cast<std::size_t>(t)] >= target)
                t = (t + 1) % pool;  // cap saturated everywhere nearby; scan
            ds.graduateStudents[s].undergraduateDegreeFrom = t;
            ++degreeCount[static_cast<std::size_t>(t)];
        }
    }

    return ds;
}

}  // namespace gqlbench
