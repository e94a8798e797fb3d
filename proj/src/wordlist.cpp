// Copyright 2026 The CommaQA Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <unordered_set>

#include "commaqa/names.hpp"

namespace commaqa {
namespace {

// Common English words plus short open-syllable words that a consonant-vowel
// generator is most likely to reproduce by accident.
const char* const kCommonWords[] = {
    "the", "be", "to", "of", "and", "a", "in", "that", "have", "it", "for",
    "not", "on", "with", "he", "as", "you", "do", "at", "this", "but", "his",
    "by", "from", "they", "we", "say", "her", "she", "or", "an", "will", "my",
    "one", "all", "would", "there", "their", "what", "so", "up", "out", "if",
    "about", "who", "get", "which", "go", "me", "when", "make", "can", "like",
    "time", "no", "just", "him", "know", "take", "people", "into", "year",
    "your", "good", "some", "could", "them", "see", "other", "than", "then",
    "now", "look", "only", "come", "its", "over", "think", "also", "back",
    "after", "use", "two", "how", "our", "work", "first", "well", "way",
    "even", "new", "want", "because", "any", "these", "give", "day", "most",
    "us", "is", "was", "are", "been", "has", "had", "were", "said", "did",
    "having", "may", "am", "man", "men", "woman", "women", "child", "children",
    "world", "life", "hand", "part", "eye", "place", "case", "week", "company",
    "system", "program", "question", "government", "number", "night", "point",
    "home", "water", "room", "mother", "area", "money", "story", "fact",
    "month", "lot", "right", "study", "book", "word", "business", "issue",
    "side", "kind", "head", "house", "service", "friend", "father", "power",
    "hour", "game", "line", "end", "member", "law", "car", "city", "name",
    "president", "team", "minute", "idea", "kid", "body", "information",
    "face", "others", "level", "office", "door", "health", "person", "art",
    "war", "history", "party", "result", "change", "morning", "reason",
    "research", "girl", "guy", "moment", "air", "teacher", "force",
    "education", "foot", "boy", "age", "policy", "process", "music", "market",
    "sense", "nation", "plan", "college", "interest", "death", "experience",
    "effect", "class", "control", "care", "field", "development", "role",
    "effort", "rate", "heart", "drug", "show", "leader", "light", "voice",
    "wife", "police", "mind", "price", "report", "decision", "son", "view",
    "relationship", "town", "road", "arm", "difference", "value", "building",
    "action", "model", "season", "society", "tax", "director", "position",
    "player", "record", "paper", "space", "ground", "form", "event",
    "official", "matter", "center", "couple", "site", "project", "activity",
    "star", "table", "need", "court", "american", "oil", "situation", "cost",
    "industry", "figure", "street", "image", "phone", "data", "picture",
    "practice", "piece", "land", "product", "doctor", "wall", "patient",
    "worker", "news", "test", "movie", "north", "love", "support",
    "technology", "step", "baby", "computer", "type", "attention", "film",
    "tree", "source", "subject", "rule", "glass", "answer", "sound", "farm",
    "winter", "summer", "spring", "autumn", "banana", "tomato", "potato",
    "camera", "video", "radio", "piano", "mama", "papa", "solo", "veto",
    "zero", "hero", "memo", "demo", "logo", "kilo", "limo", "dino", "nana",
    "visa", "sofa", "soda", "cola", "lava", "saga", "yoga", "tuna", "feta",
    "taco", "polo", "cocoa", "mango", "lemon", "melon", "salad", "pasta",
    "pizza", "sushi", "tofu", "menu", "cafe", "hotel", "motel", "cabin",
    "city", "town", "lake", "river", "mesa", "dune", "cave", "hill", "vale",
    "bay", "sea", "pine", "rose", "lily", "fern", "moss", "vine", "bean",
    "pea", "corn", "rice", "wine", "beer", "milk", "tea", "honey", "sugar",
    "salt", "pepper", "basil", "sage", "mint", "dill", "thyme", "cumin",
    "yogurt", "butter", "cream", "bread", "cake", "pie", "jam", "soup",
    "stew", "taro", "okra", "kale", "lime", "fig", "date", "plum", "pear",
    "peach", "grape", "berry", "cherry", "apple", "kiwi", "papaya", "guava",
    "salsa", "chili", "curry", "ramen", "udon", "miso", "sake", "koala",
    "panda", "zebra", "hippo", "rhino", "tiger", "lion", "puma", "lynx",
    "otter", "seal", "whale", "shark", "tuna", "cod", "sole", "pike",
    "carp", "trout", "salmon", "crab", "squid", "gecko", "iguana", "cobra",
    "viper", "boa", "toad", "frog", "newt", "bee", "wasp", "ant", "moth",
    "fly", "flea", "tick", "mite", "worm", "snail", "slug", "crow", "raven",
    "dove", "wren", "lark", "finch", "robin", "swan", "goose", "duck", "hen",
    "owl", "hawk", "eagle", "kite", "tern", "gull", "heron", "crane", "ibis",
    "emu", "kiwi", "dodo", "mole", "vole", "hare", "deer", "elk", "moose",
    "bison", "ox", "yak", "goat", "sheep", "lamb", "pig", "hog", "boar",
    "pony", "mule", "camel", "llama", "alpaca", "ferret", "mink", "sable",
    "beaver", "badger", "skunk", "racoon", "lemur", "gibbon", "baboon",
    "mandrill", "gorilla", "chimp", "bonobo", "sloth", "armadillo", "dingo",
    "hyena", "jackal", "coyote", "wolf", "fox", "bear", "cat", "dog", "bird",
    "fish", "horse", "cow", "mouse", "rat", "bat", "solo", "trio", "duo",
    "echo", "halo", "hilo", "judo", "dojo", "sumo", "tempo", "salvo", "cargo",
    "motto", "lotto", "ditto", "tutu", "zulu", "guru", "haiku", "tabu",
    "taboo", "bamboo", "igloo", "kazoo", "vireo", "rodeo", "patio", "ratio",
    "folio", "radio", "audio", "cameo", "video", "tokyo", "lima", "cairo",
    "oslo", "bonn", "rome", "paris", "berlin", "madrid", "dublin", "lagos",
    "nairobi", "delhi", "mumbai", "seoul", "osaka", "kyoto", "quito",
    "bogota", "havana", "panama", "toronto", "dallas", "denver", "boston",
    "miami", "seattle", "juneau", "reno", "tucson", "omaha", "tulsa",
    "fresno", "modesto", "pomona", "tacoma", "topeka", "peoria", "dayton",
    "toledo", "augusta", "helena", "boise", "salem", "eugene", "provo",
    "laredo", "elpaso", "waco", "fargo", "minot", "duluth", "racine",
    "kenosha", "decatur", "macon", "mobile", "biloxi", "tampa", "ocala",
    "sedona", "yuma", "mesa", "tempe", "vegas", "reno", "napa", "sonoma",
    "malibu", "venice", "verona", "milan", "turin", "genoa", "naples",
    "palermo", "catania", "messina", "padua", "siena", "pisa", "lucca",
    "como", "lugano", "geneva", "zurich", "basel", "bern", "vaduz", "vienna",
    "graz", "linz", "prague", "brno", "warsaw", "krakow", "gdansk", "lodz",
    "minsk", "kiev", "odessa", "riga", "tallinn", "vilnius", "kaunas",
    "sofia", "varna", "skopje", "tirana", "athens", "sparta", "corinth",
    "rhodes", "crete", "malta", "nicosia", "ankara", "izmir", "bursa",
    "adana", "konya", "amman", "aqaba", "mecca", "medina", "jeddah", "dubai",
    "doha", "manama", "muscat", "sanaa", "aden", "tehran", "shiraz",
    "isfahan", "tabriz", "kabul", "herat", "lahore", "karachi", "quetta",
    "dhaka", "khulna", "colombo", "kandy", "male", "kathmandu", "thimphu",
    "yangon", "mandalay", "bangkok", "phuket", "hanoi", "saigon", "hue",
    "vientiane", "phnompenh", "manila", "cebu", "davao", "jakarta",
    "surabaya", "bandung", "medan", "bali", "kuala", "penang", "ipoh",
    "johor", "brunei", "taipei", "tainan", "kaohsiung", "beijing",
    "shanghai", "tianjin", "wuhan", "chengdu", "xian", "harbin", "dalian",
    "qingdao", "suzhou", "hangzhou", "ningbo", "xiamen", "shenzhen",
    "guangzhou", "macau", "hongkong", "ulan", "bator", "irkutsk", "omsk",
    "tomsk", "perm", "kazan", "samara", "saratov", "volgograd", "rostov",
    "sochi", "moscow", "tver", "pskov", "murmansk", "anadyr", "magadan",
    "yakutsk", "chita", "bratsk", "norilsk", "surgut", "tyumen", "kurgan",
    "orenburg", "ufa", "izhevsk", "kirov", "vologda", "ryazan", "tula",
    "kaluga", "bryansk", "kursk", "belgorod", "voronezh", "lipetsk",
    "tambov", "penza", "ulyanovsk", "cheboksary", "yoshkarola", "saransk"};

const std::unordered_set<std::string>& word_set() {
  static const std::unordered_set<std::string> kSet(std::begin(kCommonWords),
                                                    std::end(kCommonWords));
  return kSet;
}

}  // namespace

bool is_common_english_word(const std::string& word) {
  return word_set().count(word) > 0;
}

size_t common_wordlist_size() { return word_set().size(); }

}  // namespace commaqa
