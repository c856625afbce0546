#include "steplab/task.hpp"

namespace steplab {

// Public-domain anthology (classic American documents and speeches, poetry,
// scripture, novel openings, and retold fables) embedded so the character
// task needs no downloads and no files on disk.
namespace {

const char kCorpus[] = R"ANTHOLOGY(THE DECLARATION OF INDEPENDENCE

In Congress, July 4, 1776.

The unanimous Declaration of the thirteen united States of America.

When in the Course of human events, it becomes necessary for one people to
dissolve the political bands which have connected them with another, and to
assume among the powers of the earth, the separate and equal station to
which the Laws of Nature and of Nature's God entitle them, a decent respect
to the opinions of mankind requires that they should declare the causes
which impel them to the separation.

We hold these truths to be self-evident, that all men are created equal,
that they are endowed by their Creator with certain unalienable Rights,
that among these are Life, Liberty and the pursuit of Happiness. That to
secure these rights, Governments are instituted among Men, deriving their
just powers from the consent of the governed, That whenever any Form of
Government becomes destructive of these ends, it is the Right of the People
to alter or to abolish it, and to institute new Government, laying its
foundation on such principles and organizing its powers in such form, as to
them shall seem most likely to effect their Safety and Happiness. Prudence,
indeed, will dictate that Governments long established should not be
changed for light and transient causes; and accordingly all experience hath
shewn, that mankind are more disposed to suffer, while evils are
sufferable, than to right themselves by abolishing the forms to which they
are accustomed. But when a long train of abuses and usurpations, pursuing
invariably the same Object evinces a design to reduce them under absolute
Despotism, it is their right, it is their duty, to throw off such
Government, and to provide new Guards for their future security. Such has
been the patient sufferance of these Colonies; and such is now the
necessity which constrains them to alter their former Systems of
Government. The history of the present King of Great Britain is a history
of repeated injuries and usurpations, all having in direct object the
establishment of an absolute Tyranny over these States. To prove this, let
Facts be submitted to a candid world.

He has refused his Assent to Laws, the most wholesome and necessary for the
public good.

He has forbidden his Governors to pass Laws of immediate and pressing
importance, unless suspended in their operation till his Assent should be
obtained; and when so suspended, he has utterly neglected to attend to
them.

He has refused to pass other Laws for the accommodation of large districts
of people, unless those people would relinquish the right of Representation
in the Legislature, a right inestimable to them and formidable to tyrants
only.

He has called together legislative bodies at places unusual, uncomfortable,
and distant from the depository of their public Records, for the sole
purpose of fatiguing them into compliance with his measures.

He has dissolved Representative Houses repeatedly, for opposing with manly
firmness his invasions on the rights of the people.

He has refused for a long time, after such dissolutions, to cause others to
be elected; whereby the Legislative powers, incapable of Annihilation, have
returned to the People at large for their exercise; the State remaining in
the mean time exposed to all the dangers of invasion from without, and
convulsions within.

He has endeavoured to prevent the population of these States; for that
purpose obstructing the Laws for Naturalization of Foreigners; refusing to
pass others to encourage their migrations hither, and raising the
conditions of new Appropriations of Lands.

He has obstructed the Administration of Justice, by refusing his Assent to
Laws for establishing Judiciary powers.

He has made Judges dependent on his Will alone, for the tenure of their
offices, and the amount and payment of their salaries.

He has erected a multitude of New Offices, and sent hither swarms of
Officers to harrass our people, and eat out their substance.

He has kept among us, in times of peace, Standing Armies without the
Consent of our legislatures.

He has affected to render the Military independent of and superior to the
Civil power.

He has combined with others to subject us to a jurisdiction foreign to our
constitution, and unacknowledged by our laws; giving his Assent to their
Acts of pretended Legislation:

For Quartering large bodies of armed troops among us:

For protecting them, by a mock Trial, from punishment for any Murders which
they should commit on the Inhabitants of these States:

For cutting off our Trade with all parts of the world:

For imposing Taxes on us without our Consent:

For depriving us in many cases, of the benefits of Trial by Jury:

For transporting us beyond Seas to be tried for pretended offences:

For abolishing the free System of English Laws in a neighbouring Province,
establishing therein an Arbitrary government, and enlarging its Boundaries
so as to render it at once an example and fit instrument for introducing
the same absolute rule into these Colonies:

For taking away our Charters, abolishing our most valuable Laws, and
altering fundamentally the Forms of our Governments:

For suspending our own Legislatures, and declaring themselves invested with
power to legislate for us in all cases whatsoever.

He has abdicated Government here, by declaring us out of his Protection and
waging War against us.

He has plundered our seas, ravaged our Coasts, burnt our towns, and
destroyed the lives of our people.

He is at this time transporting large Armies of foreign Mercenaries to
compleat the works of death, desolation and tyranny, already begun with
circumstances of Cruelty and perfidy scarcely paralleled in the most
barbarous ages, and totally unworthy the Head of a civilized nation.

He has constrained our fellow Citizens taken Captive on the high Seas to
bear Arms against their Country, to become the executioners of their
friends and Brethren, or to fall themselves by their Hands.

He has excited domestic insurrections amongst us, and has endeavoured to
bring on the inhabitants of our frontiers, the merciless Indian Savages,
whose known rule of warfare, is an undistinguished destruction of all ages,
sexes and conditions.

In every stage of these Oppressions We have Petitioned for Redress in the
most humble terms: Our repeated Petitions have been answered only by
repeated injury. A Prince whose character is thus marked by every act which
may define a Tyrant, is unfit to be the ruler of a free people.

Nor have We been wanting in attentions to our Brittish brethren. We have
warned them from time to time of attempts by their legislature to extend an
unwarrantable jurisdiction over us. We have reminded them of the
circumstances of our emigration and settlement here. We have appealed to
their native justice and magnanimity, and we have conjured them by the ties
of our common kindred to disavow these usurpations, which, would inevitably
interrupt our connections and correspondence. They too have been deaf to
the voice of justice and of consanguinity. We must, therefore, acquiesce in
the necessity, which denounces our Separation, and hold them, as we hold
the rest of mankind, Enemies in War, in Peace Friends.

We, therefore, the Representatives of the united States of America, in
General Congress, Assembled, appealing to the Supreme Judge of the world
for the rectitude of our intentions, do, in the Name, and by Authority of
the good People of these Colonies, solemnly publish and declare, That these
United Colonies are, and of Right ought to be Free and Independent States;
that they are Absolved from all Allegiance to the British Crown, and that
all political connection between them and the State of Great Britain, is
and ought to be totally dissolved; and that as Free and Independent States,
they have full Power to levy War, conclude Peace, contract Alliances,
establish Commerce, and to do all other Acts and Things which Independent
States may of right do. And for the support of this Declaration, with a
firm reliance on the protection of divine Providence, we mutually pledge to
each other our Lives, our Fortunes and our sacred Honor.


THE PREAMBLE TO THE CONSTITUTION OF THE UNITED STATES

We the People of the United States, in Order to form a more perfect Union,
establish Justice, insure domestic Tranquility, provide for the common
defence, promote the general Welfare, and secure the Blessings of Liberty
to ourselves and our Posterity, do ordain and establish this Constitution
for the United States of America.


THE BILL OF RIGHTS

Amendment I. Congress shall make no law respecting an establishment of
religion, or prohibiting the free exercise thereof; or abridging the
freedom of speech, or of the press; or the right of the people peaceably to
assemble, and to petition the Government for a redress of grievances.

Amendment II. A well regulated Militia, being necessary to the security of
a free State, the right of the people to keep and bear Arms, shall not be
infringed.

Amendment III. No Soldier shall, in time of peace be quartered in any
house, without the consent of the Owner, nor in time of war, but in a
manner to be prescribed by law.

Amendment IV. The right of the people to be secure in their persons,
houses, papers, and effects, against unreasonable searches and seizures,
shall not be violated, and no Warrants shall issue, but upon probable
cause, supported by Oath or affirmation, and particularly describing the
place to be searched, and the persons or things to be seized.

Amendment V. No person shall be held to answer for a capital, or otherwise
infamous crime, unless on a presentment or indictment of a Grand Jury,
except in cases arising in the land or naval forces, or in the Militia,
when in actual service in time of War or public danger; nor shall any
person be subject for the same offence to be twice put in jeopardy of life
or limb; nor shall be compelled in any criminal case to be a witness
against himself, nor be deprived of life, liberty, or property, without due
process of law; nor shall private property be taken for public use, without
just compensation.

Amendment VI. In all criminal prosecutions, the accused shall enjoy the
right to a speedy and public trial, by an impartial jury of the State and
district wherein the crime shall have been committed, which district shall
have been previously ascertained by law, and to be informed of the nature
and cause of the accusation; to be confronted with the witnesses against
him; to have compulsory process for obtaining witnesses in his favor, and
to have the Assistance of Counsel for his defence.

Amendment VII. In Suits at common law, where the value in controversy shall
exceed twenty dollars, the right of trial by jury shall be preserved, and
no fact tried by a jury, shall be otherwise re-examined in any Court of the
United States, than according to the rules of the common law.

Amendment VIII. Excessive bail shall not be required, nor excessive fines
imposed, nor cruel and unusual punishments inflicted.

Amendment IX. The enumeration in the Constitution, of certain rights, shall
not be construed to deny or disparage others retained by the people.

Amendment X. The powers not delegated to the United States by the
Constitution, nor prohibited by it to the States, are reserved to the
States respectively, or to the people.


THE GETTYSBURG ADDRESS
Abraham Lincoln, November 19, 1863

Four score and seven years ago our fathers brought forth on this continent,
a new nation, conceived in Liberty, and dedicated to the proposition that
all men are created equal.

Now we are engaged in a great civil war, testing whether that nation, or
any nation so conceived and so dedicated, can long endure. We are met on a
great battle-field of that war. We have come to dedicate a portion of that
field, as a final resting place for those who here gave their lives that
that nation might live. It is altogether fitting and proper that we should
do this.

But, in a larger sense, we can not dedicate -- we can not consecrate -- we
can not hallow -- this ground. The brave men, living and dead, who struggled
here, have consecrated it, far above our poor power to add or detract. The
world will little note, nor long remember what we say here, but it can
never forget what they did here. It is for us the living, rather, to be
dedicated here to the unfinished work which they who fought here have thus
far so nobly advanced. It is rather for us to be here dedicated to the
great task remaining before us -- that from these honored dead we take
increased devotion to that cause for which they gave the last full measure
of devotion -- that we here highly resolve that these dead shall not have
died in vain -- that this nation, under God, shall have a new birth of
freedom -- and that government of the people, by the people, for the
people, shall not perish from the earth.


LINCOLN'S SECOND INAUGURAL ADDRESS
March 4, 1865

Fellow-Countrymen:

At this second appearing to take the oath of the Presidential office there
is less occasion for an extended address than there was at the first. Then
a statement somewhat in detail of a course to be pursued seemed fitting and
proper. Now, at the expiration of four years, during which public
declarations have been constantly called forth on every point and phase of
the great contest which still absorbs the attention and engrosses the
energies of the nation, little that is new could be presented. The progress
of our arms, upon which all else chiefly depends, is as well known to the
public as to myself, and it is, I trust, reasonably satisfactory and
encouraging to all. With high hope for the future, no prediction in regard
to it is ventured.

On the occasion corresponding to this four years ago all thoughts were
anxiously directed to an impending civil war. All dreaded it, all sought to
avert it. While the inaugural address was being delivered from this place,
devoted altogether to saving the Union without war, insurgent agents were
in the city seeking to destroy it without war -- seeking to dissolve the
Union and divide effects by negotiation. Both parties deprecated war, but
one of them would make war rather than let the nation survive, and the
other would accept war rather than let it perish, and the war came.

One-eighth of the whole population were colored slaves, not distributed
generally over the Union, but localized in the southern part of it. These
slaves constituted a peculiar and powerful interest. All knew that this
interest was somehow the cause of the war. To strengthen, perpetuate, and
extend this interest was the object for which the insurgents would rend the
Union even by war, while the Government claimed no right to do more than to
restrict the territorial enlargement of it. Neither party expected for the
war the magnitude or the duration which it has already attained. Neither
anticipated that the cause of the conflict might cease with or even before
the conflict itself should cease. Each looked for an easier triumph, and a
result less fundamental and astounding. Both read the same Bible and pray
to the same God, and each invokes His aid against the other. It may seem
strange that any men should dare to ask a just God's assistance in wringing
their bread from the sweat of other men's faces, but let us judge not, that
we be not judged. The prayers of both could not be answered. That of
neither has been answered fully. The Almighty has His own purposes.

With malice toward none, with charity for all, with firmness in the right
as God gives us to see the right, let us strive on to finish the work we
are in, to bind up the nation's wounds, to care for him who shall have
borne the battle and for his widow and his orphan, to do all which may
achieve and cherish a just and lasting peace among ourselves and with all
nations.


THE MAYFLOWER COMPACT
November 11, 1620

In the name of God, Amen. We whose names are underwritten, the loyal
subjects of our dread Sovereign Lord King James, by the Grace of God of
Great Britain, France, and Ireland, King, Defender of the Faith, etc.,
having undertaken, for the Glory of God and advancement of the Christian
Faith and Honour of our King and Country, a Voyage to plant the First
Colony in the Northern Parts of Virginia, do by these presents solemnly and
mutually in the presence of God and one of another, Covenant and Combine
ourselves together in a Civil Body Politic, for our better ordering and
preservation and furtherance of the ends aforesaid; and by virtue hereof to
enact, constitute and frame such just and equal Laws, Ordinances, Acts,
Constitutions and Offices from time to time, as shall be thought most meet
and convenient for the general good of the Colony, unto which we promise
all due submission and obedience. In witness whereof we have hereunder
subscribed our names at Cape Cod, the 11th of November, in the year of the
reign of our Sovereign Lord King James, of England, France and Ireland the
eighteenth, and of Scotland the fifty-fourth. Anno Domini 1620.


SONNETS AND SPEECHES OF WILLIAM SHAKESPEARE

Sonnet XVIII

Shall I compare thee to a summer's day?
Thou art more lovely and more temperate:
Rough winds do shake the darling buds of May,
And summer's lease hath all too short a date:
Sometime too hot the eye of heaven shines,
And often is his gold complexion dimm'd;
And every fair from fair sometime declines,
By chance, or nature's changing course, untrimm'd;
But thy eternal summer shall not fade
Nor lose possession of that fair thou ow'st;
Nor shall Death brag thou wander'st in his shade,
When in eternal lines to time thou grow'st;
So long as men can breathe or eyes can see,
So long lives this, and this gives life to thee.

Sonnet XXIX

When, in disgrace with fortune and men's eyes,
I all alone beweep my outcast state,
And trouble deaf heaven with my bootless cries,
And look upon myself and curse my fate,
Wishing me like to one more rich in hope,
Featured like him, like him with friends possess'd,
Desiring this man's art and that man's scope,
With what I most enjoy contented least;
Yet in these thoughts myself almost despising,
Haply I think on thee, and then my state,
Like to the lark at break of day arising
From sullen earth, sings hymns at heaven's gate;
For thy sweet love remember'd such wealth brings
That then I scorn to change my state with kings.

Sonnet LXXIII

That time of year thou mayst in me behold
When yellow leaves, or none, or few, do hang
Upon those boughs which shake against the cold,
Bare ruin'd choirs, where late the sweet birds sang.
In me thou see'st the twilight of such day
As after sunset fadeth in the west,
Which by and by black night doth take away,
Death's second self, that seals up all in rest.
In me thou see'st the glowing of such fire
That on the ashes of his youth doth lie,
As the death-bed whereon it must expire,
Consum'd with that which it was nourish'd by.
This thou perceiv'st, which makes thy love more strong,
To love that well which thou must leave ere long.

Sonnet CXVI

Let me not to the marriage of true minds
Admit impediments. Love is not love
Which alters when it alteration finds,
Or bends with the remover to remove:
O, no! it is an ever-fixed mark,
That looks on tempests and is never shaken;
It is the star to every wandering bark,
Whose worth's unknown, although his height be taken.
Love's not Time's fool, though rosy lips and cheeks
Within his bending sickle's compass come;
Love alters not with his brief hours and weeks,
But bears it out even to the edge of doom.
If this be error, and upon me prov'd,
I never writ, nor no man ever lov'd.

Sonnet CXXX

My mistress' eyes are nothing like the sun;
Coral is far more red than her lips' red;
If snow be white, why then her breasts are dun;
If hairs be wires, black wires grow on her head.
I have seen roses damask'd, red and white,
But no such roses see I in her cheeks;
And in some perfumes is there more delight
Than in the breath that from my mistress reeks.
I love to hear her speak, yet well I know
That music hath a far more pleasing sound;
I grant I never saw a goddess go;
My mistress, when she walks, treads on the ground:
And yet, by heaven, I think my love as rare
As any she belied with false compare.

From Hamlet, Act III, Scene I

To be, or not to be, that is the question:
Whether 'tis nobler in the mind to suffer
The slings and arrows of outrageous fortune,
Or to take arms against a sea of troubles
And by opposing end them. To die -- to sleep,
No more; and by a sleep to say we end
The heart-ache and the thousand natural shocks
That flesh is heir to: 'tis a consummation
Devoutly to be wish'd. To die, to sleep;
To sleep, perchance to dream -- ay, there's the rub:
For in that sleep of death what dreams may come,
When we have shuffled off this mortal coil,
Must give us pause -- there's the respect
That makes calamity of so long life.
For who would bear the whips and scorns of time,
Th'oppressor's wrong, the proud man's contumely,
The pangs of dispriz'd love, the law's delay,
The insolence of office, and the spurns
That patient merit of th'unworthy takes,
When he himself might his quietus make
With a bare bodkin? Who would fardels bear,
To grunt and sweat under a weary life,
But that the dread of something after death,
The undiscover'd country, from whose bourn
No traveller returns, puzzles the will,
And makes us rather bear those ills we have
Than fly to others that we know not of?
Thus conscience does make cowards of us all,
And thus the native hue of resolution
Is sicklied o'er with the pale cast of thought,
And enterprises of great pith and moment
With this regard their currents turn awry
And lose the name of action.

From Macbeth, Act V, Scene V

To-morrow, and to-morrow, and to-morrow,
Creeps in this petty pace from day to day,
To the last syllable of recorded time;
And all our yesterdays have lighted fools
The way to dusty death. Out, out, brief candle!
Life's but a walking shadow, a poor player,
That struts and frets his hour upon the stage,
And then is heard no more. It is a tale
Told by an idiot, full of sound and fury,
Signifying nothing.

From As You Like It, Act II, Scene VII

All the world's a stage,
And all the men and women merely players;
They have their exits and their entrances,
And one man in his time plays many parts,
His acts being seven ages. At first, the infant,
Mewling and puking in the nurse's arms.
Then the whining schoolboy, with his satchel
And shining morning face, creeping like snail
Unwillingly to school. And then the lover,
Sighing like furnace, with a woeful ballad
Made to his mistress' eyebrow. Then a soldier,
Full of strange oaths and bearded like the pard,
Jealous in honour, sudden and quick in quarrel,
Seeking the bubble reputation
Even in the cannon's mouth. And then the justice,
In fair round belly with good capon lined,
With eyes severe and beard of formal cut,
Full of wise saws and modern instances;
And so he plays his part. The sixth age shifts
Into the lean and slipper'd pantaloon,
With spectacles on nose and pouch on side;
His youthful hose, well saved, a world too wide
For his shrunk shank, and his big manly voice,
Turning again toward childish treble, pipes
And whistles in his sound. Last scene of all,
That ends this strange eventful history,
Is second childishness and mere oblivion,
Sans teeth, sans eyes, sans taste, sans everything.

From The Merchant of Venice, Act IV, Scene I

The quality of mercy is not strain'd,
It droppeth as the gentle rain from heaven
Upon the place beneath: it is twice blest;
It blesseth him that gives and him that takes:
'Tis mightiest in the mightiest: it becomes
The throned monarch better than his crown;
His sceptre shows the force of temporal power,
The attribute to awe and majesty,
Wherein doth sit the dread and fear of kings;
But mercy is above this sceptred sway;
It is enthroned in the hearts of kings,
It is an attribute to God himself;
And earthly power doth then show likest God's
When mercy seasons justice.

From Henry V, Act IV, Scene III

This day is called the feast of Crispian:
He that outlives this day, and comes safe home,
Will stand a tip-toe when this day is named,
And rouse him at the name of Crispian.
He that shall live this day, and see old age,
Will yearly on the vigil feast his neighbours,
And say 'To-morrow is Saint Crispian:'
Then will he strip his sleeve and show his scars,
And say 'These wounds I had on Crispin's day.'
Old men forget: yet all shall be forgot,
But he'll remember with advantages
What feats he did that day: then shall our names,
Familiar in his mouth as household words,
Harry the king, Bedford and Exeter,
Warwick and Talbot, Salisbury and Gloucester,
Be in their flowing cups freshly remember'd.
This story shall the good man teach his son;
And Crispin Crispian shall ne'er go by,
From this day to the ending of the world,
But we in it shall be remembered;
We few, we happy few, we band of brothers;
For he to-day that sheds his blood with me
Shall be my brother; be he ne'er so vile,
This day shall gentle his condition:
And gentlemen in England now a-bed
Shall think themselves accursed they were not here,
And hold their manhoods cheap whiles any speaks
That fought with us upon Saint Crispin's day.

From The Tempest, Act IV, Scene I

Our revels now are ended. These our actors,
As I foretold you, were all spirits and
Are melted into air, into thin air:
And, like the baseless fabric of this vision,
The cloud-capp'd towers, the gorgeous palaces,
The solemn temples, the great globe itself,
Yea, all which it inherit, shall dissolve
And, like this insubstantial pageant faded,
Leave not a rack behind. We are such stuff
As dreams are made on, and our little life
Is rounded with a sleep.


THE RAVEN
Edgar Allan Poe, 1845

Once upon a midnight dreary, while I pondered, weak and weary,
Over many a quaint and curious volume of forgotten lore --
While I nodded, nearly napping, suddenly there came a tapping,
As of some one gently rapping, rapping at my chamber door.
"'Tis some visiter," I muttered, "tapping at my chamber door --
Only this and nothing more."

Ah, distinctly I remember it was in the bleak December;
And each separate dying ember wrought its ghost upon the floor.
Eagerly I wished the morrow; -- vainly I had sought to borrow
From my books surcease of sorrow -- sorrow for the lost Lenore --
For the rare and radiant maiden whom the angels name Lenore --
Nameless here for evermore.

And the silken, sad, uncertain rustling of each purple curtain
Thrilled me -- filled me with fantastic terrors never felt before;
So that now, to still the beating of my heart, I stood repeating
"'Tis some visiter entreating entrance at my chamber door --
Some late visiter entreating entrance at my chamber door; --
This it is and nothing more."

Presently my soul grew stronger; hesitating then no longer,
"Sir," said I, "or Madam, truly your forgiveness I implore;
But the fact is I was napping, and so gently you came rapping,
And so faintly you came tapping, tapping at my chamber door,
That I scarce was sure I heard you" -- here I opened wide the door; --
Darkness there and nothing more.

Deep into that darkness peering, long I stood there wondering, fearing,
Doubting, dreaming dreams no mortal ever dared to dream before;
But the silence was unbroken, and the stillness gave no token,
And the only word there spoken was the whispered word, "Lenore?"
This I whispered, and an echo murmured back the word, "Lenore!" --
Merely this and nothing more.

Back into the chamber turning, all my soul within me burning,
Soon again I heard a tapping somewhat louder than before.
"Surely," said I, "surely that is something at my window lattice;
Let me see, then, what thereat is, and this mystery explore --
Let my heart be still a moment and this mystery explore; --
'Tis the wind and nothing more!"

Open here I flung the shutter, when, with many a flirt and flutter,
In there stepped a stately Raven of the saintly days of yore;
Not the least obeisance made he; not a minute stopped or stayed he;
But, with mien of lord or lady, perched above my chamber door --
Perched upon a bust of Pallas just above my chamber door --
Perched, and sat, and nothing more.

Then this ebony bird beguiling my sad fancy into smiling,
By the grave and stern decorum of the countenance it wore,
"Though thy crest be shorn and shaven, thou," I said, "art sure no craven,
Ghastly grim and ancient Raven wandering from the Nightly shore --
Tell me what thy lordly name is on the Night's Plutonian shore!"
Quoth the Raven "Nevermore."

Much I marvelled this ungainly fowl to hear discourse so plainly,
Though its answer little meaning -- little relevancy bore;
For we cannot help agreeing that no living human being
Ever yet was blessed with seeing bird above his chamber door --
Bird or beast upon the sculptured bust above his chamber door,
With such name as "Nevermore."

But the Raven, sitting lonely on the placid bust, spoke only
That one word, as if his soul in that one word he did outpour.
Nothing farther then he uttered -- not a feather then he fluttered --
Till I scarcely more than muttered "Other friends have flown before --
On the morrow he will leave me, as my Hopes have flown before."
Then the bird said "Nevermore."

Startled at the stillness broken by reply so aptly spoken,
"Doubtless," said I, "what it utters is its only stock and store
Caught from some unhappy master whom unmerciful Disaster
Followed fast and followed faster till his songs one burden bore --
Till the dirges of his Hope that melancholy burden bore
Of 'Never -- nevermore'."

But the Raven still beguiling all my fancy into smiling,
Straight I wheeled a cushioned seat in front of bird, and bust and door;
Then, upon the velvet sinking, I betook myself to linking
Fancy unto fancy, thinking what this ominous bird of yore --
What this grim, ungainly, ghastly, gaunt, and ominous bird of yore
Meant in croaking "Nevermore."

This I sat engaged in guessing, but no syllable expressing
To the fowl whose fiery eyes now burned into my bosom's core;
This and more I sat divining, with my head at ease reclining
On the cushion's velvet lining that the lamp-light gloated o'er,
But whose velvet-violet lining with the lamp-light gloating o'er,
She shall press, ah, nevermore!

Then, methought, the air grew denser, perfumed from an unseen censer
Swung by Seraphim whose foot-falls tinkled on the tufted floor.
"Wretch," I cried, "thy God hath lent thee -- by these angels he hath sent thee
Respite -- respite and nepenthe from thy memories of Lenore;
Quaff, oh quaff this kind nepenthe and forget this lost Lenore!"
Quoth the Raven "Nevermore."

"Prophet!" said I, "thing of evil! -- prophet still, if bird or devil! --
Whether Tempter sent, or whether tempest tossed thee here ashore,
Desolate yet all undaunted, on this desert land enchanted --
On this home by Horror haunted -- tell me truly, I implore --
Is there -- is there balm in Gilead? -- tell me -- tell me, I implore!"
Quoth the Raven "Nevermore."

"Prophet!" said I, "thing of evil! -- prophet still, if bird or devil!
By that Heaven that bends above us -- by that God we both adore --
Tell this soul with sorrow laden if, within the distant Aidenn,
It shall clasp a sainted maiden whom the angels name Lenore --
Clasp a rare and radiant maiden whom the angels name Lenore."
Quoth the Raven "Nevermore."

"Be that word our sign of parting, bird or fiend!" I shrieked, upstarting --
"Get thee back into the tempest and the Night's Plutonian shore!
Leave no black plume as a token of that lie thy soul hath spoken!
Leave my loneliness unbroken! -- quit the bust above my door!
Take thy beak from out my heart, and take thy form from off my door!"
Quoth the Raven "Nevermore."

And the Raven, never flitting, still is sitting, still is sitting
On the pallid bust of Pallas just above my chamber door;
And his eyes have all the seeming of a demon's that is dreaming,
And the lamp-light o'er him streaming throws his shadow on the floor;
And my soul from out that shadow that lies floating on the floor
Shall be lifted -- nevermore!


ANNABEL LEE
Edgar Allan Poe, 1849

It was many and many a year ago,
In a kingdom by the sea,
That a maiden there lived whom you may know
By the name of Annabel Lee;
And this maiden she lived with no other thought
Than to love and be loved by me.

I was a child and she was a child,
In this kingdom by the sea:
But we loved with a love that was more than love --
I and my Annabel Lee;
With a love that the winged seraphs of heaven
Coveted her and me.

And this was the reason that, long ago,
In this kingdom by the sea,
A wind blew out of a cloud, chilling
My beautiful Annabel Lee;
So that her highborn kinsman came
And bore her away from me,
To shut her up in a sepulchre
In this kingdom by the sea.

The angels, not half so happy in heaven,
Went envying her and me --
Yes! -- that was the reason (as all men know,
In this kingdom by the sea)
That the wind came out of the cloud by night,
Chilling and killing my Annabel Lee.

But our love it was stronger by far than the love
Of those who were older than we --
Of many far wiser than we --
And neither the angels in heaven above,
Nor the demons down under the sea,
Can ever dissever my soul from the soul
Of the beautiful Annabel Lee:

For the moon never beams, without bringing me dreams
Of the beautiful Annabel Lee;
And the stars never rise, but I feel the bright eyes
Of the beautiful Annabel Lee;
And so, all the night-tide, I lie down by the side
Of my darling -- my darling -- my life and my bride,
In her sepulchre there by the sea --
In her tomb by the sounding sea.


OZYMANDIAS
Percy Bysshe Shelley, 1818

I met a traveller from an antique land
Who said: Two vast and trunkless legs of stone
Stand in the desert. Near them, on the sand,
Half sunk, a shattered visage lies, whose frown,
And wrinkled lip, and sneer of cold command,
Tell that its sculptor well those passions read
Which yet survive, stamped on these lifeless things,
The hand that mocked them and the heart that fed:
And on the pedestal these words appear:
"My name is Ozymandias, king of kings:
Look on my works, ye Mighty, and despair!"
Nothing beside remains. Round the decay
Of that colossal wreck, boundless and bare
The lone and level sands stretch far away.


THE TYGER
William Blake, 1794

Tyger Tyger, burning bright,
In the forests of the night;
What immortal hand or eye,
Could frame thy fearful symmetry?

In what distant deeps or skies
Burnt the fire of thine eyes?
On what wings dare he aspire?
What the hand, dare seize the fire?

And what shoulder, and what art,
Could twist the sinews of thy heart?
And when thy heart began to beat,
What dread hand? and what dread feet?

What the hammer? what the chain,
In what furnace was thy brain?
What the anvil? what dread grasp,
Dare its deadly terrors clasp!

When the stars threw down their spears
And water'd heaven with their tears:
Did he smile his work to see?
Did he who made the Lamb make thee?

Tyger Tyger burning bright,
In the forests of the night:
What immortal hand or eye,
Dare frame thy fearful symmetry?


JABBERWOCKY
Lewis Carroll, 1871

'Twas brillig, and the slithy toves
Did gyre and gimble in the wabe:
All mimsy were the borogoves,
And the mome raths outgrabe.

"Beware the Jabberwock, my son!
The jaws that bite, the claws that catch!
Beware the Jubjub bird, and shun
The frumious Bandersnatch!"

He took his vorpal sword in hand;
Long time the manxome foe he sought --
So rested he by the Tumtum tree
And stood awhile in thought.

And, as in uffish thought he stood,
The Jabberwock, with eyes of flame,
Came whiffling through the tulgey wood,
And burbled as it came!

One, two! One, two! And through and through
The vorpal blade went snicker-snack!
He left it dead, and with its head
He went galumphing back.

"And hast thou slain the Jabberwock?
Come to my arms, my beamish boy!
O frabjous day! Callooh! Callay!"
He chortled in his joy.

'Twas brillig, and the slithy toves
Did gyre and gimble in the wabe:
All mimsy were the borogoves,
And the mome raths outgrabe.


THE ROAD NOT TAKEN
Robert Frost, 1916

Two roads diverged in a yellow wood,
And sorry I could not travel both
And be one traveler, long I stood
And looked down one as far as I could
To where it bent in the undergrowth;

Then took the other, as just as fair,
And having perhaps the better claim,
Because it was grassy and wanted wear;
Though as for that the passing there
Had worn them really about the same,

And both that morning equally lay
In leaves no step had trodden black.
Oh, I kept the first for another day!
Yet knowing how way leads on to way,
I doubted if I should ever come back.

I shall be telling this with a sigh
Somewhere ages and ages hence:
Two roads diverged in a wood, and I --
I took the one less traveled by,
And that has made all the difference.


STOPPING BY WOODS ON A SNOWY EVENING
Robert Frost, 1923

Whose woods these are I think I know.
His house is in the village though;
He will not see me stopping here
To watch his woods fill up with snow.

My little horse must think it queer
To stop without a farmhouse near
Between the woods and frozen lake
The darkest evening of the year.

He gives his harness bells a shake
To ask if there is some mistake.
The only other sound's the sweep
Of easy wind and downy flake.

The woods are lovely, dark and deep,
But I have promises to keep,
And miles to go before I sleep,
And miles to go before I sleep.


FIRE AND ICE
Robert Frost, 1920

Some say the world will end in fire,
Some say in ice.
From what I've tasted of desire
I hold with those who favor fire.
But if it had to perish twice,
I think I know enough of hate
To say that for destruction ice
Is also great
And would suffice.


IF --
Rudyard Kipling, 1910

If you can keep your head when all about you
Are losing theirs and blaming it on you,
If you can trust yourself when all men doubt you,
But make allowance for their doubting too;
If you can wait and not be tired by waiting,
Or being lied about, don't deal in lies,
Or being hated, don't give way to hating,
And yet don't look too good, nor talk too wise:

If you can dream -- and not make dreams your master;
If you can think -- and not make thoughts your aim;
If you can meet with Triumph and Disaster
And treat those two impostors just the same;
If you can bear to hear the truth you've spoken
Twisted by knaves to make a trap for fools,
Or watch the things you gave your life to, broken,
And stoop and build 'em up with worn-out tools:

If you can make one heap of all your winnings
And risk it on one turn of pitch-and-toss,
And lose, and start again at your beginnings
And never breathe a word about your loss;
If you can force your heart and nerve and sinew
To serve your turn long after they are gone,
And so hold on when there is nothing in you
Except the Will which says to them: "Hold on!"

If you can talk with crowds and keep your virtue,
Or walk with Kings -- nor lose the common touch,
If neither foes nor loving friends can hurt you,
If all men count with you, but none too much;
If you can fill the unforgiving minute
With sixty seconds' worth of distance run,
Yours is the Earth and everything that's in it,
And -- which is more -- you'll be a Man, my son!


INVICTUS
William Ernest Henley, 1888

Out of the night that covers me,
Black as the Pit from pole to pole,
I thank whatever gods may be
For my unconquerable soul.

In the fell clutch of circumstance
I have not winced nor cried aloud.
Under the bludgeonings of chance
My head is bloody, but unbowed.

Beyond this place of wrath and tears
Looms but the Horror of the shade,
And yet the menace of the years
Finds, and shall find, me unafraid.

It matters not how strait the gate,
How charged with punishments the scroll,
I am the master of my fate:
I am the captain of my soul.


I WANDERED LONELY AS A CLOUD
William Wordsworth, 1807

I wandered lonely as a cloud
That floats on high o'er vales and hills,
When all at once I saw a crowd,
A host, of golden daffodils;
Beside the lake, beneath the trees,
Fluttering and dancing in the breeze.

Continuous as the stars that shine
And twinkle on the milky way,
They stretched in never-ending line
Along the margin of a bay:
Ten thousand saw I at a glance,
Tossing their heads in sprightly dance.

The waves beside them danced; but they
Out-did the sparkling waves in glee:
A poet could not but be gay,
In such a jocund company:
I gazed -- and gazed -- but little thought
What wealth the show to me had brought:

For oft, when on my couch I lie
In vacant or in pensive mood,
They flash upon that inward eye
Which is the bliss of solitude;
And then my heart with pleasure fills,
And dances with the daffodils.


KUBLA KHAN
Samuel Taylor Coleridge, 1816

In Xanadu did Kubla Khan
A stately pleasure-dome decree:
Where Alph, the sacred river, ran
Through caverns measureless to man
Down to a sunless sea.
So twice five miles of fertile ground
With walls and towers were girdled round:
And there were gardens bright with sinuous rills,
Where blossomed many an incense-bearing tree;
And here were forests ancient as the hills,
Enfolding sunny spots of greenery.

But oh! that deep romantic chasm which slanted
Down the green hill athwart a cedarn cover!
A savage place! as holy and enchanted
As e'er beneath a waning moon was haunted
By woman wailing for her demon-lover!
And from this chasm, with ceaseless turmoil seething,
As if this earth in fast thick pants were breathing,
A mighty fountain momently was forced:
Amid whose swift half-intermitted burst
Huge fragments vaulted like rebounding hail,
Or chaffy grain beneath the thresher's flail:
And 'mid these dancing rocks at once and ever
It flung up momently the sacred river.
Five miles meandering with a mazy motion
Through wood and dale the sacred river ran,
Then reached the caverns measureless to man,
And sank in tumult to a lifeless ocean:
And 'mid this tumult Kubla heard from far
Ancestral voices prophesying war!

The shadow of the dome of pleasure
Floated midway on the waves;
Where was heard the mingled measure
From the fountain and the caves.
It was a miracle of rare device,
A sunny pleasure-dome with caves of ice!

A damsel with a dulcimer
In a vision once I saw:
It was an Abyssinian maid,
And on her dulcimer she played,
Singing of Mount Abora.
Could I revive within me
Her symphony and song,
To such a deep delight 'twould win me,
That with music loud and long,
I would build that dome in air,
That sunny dome! those caves of ice!
And all who heard should see them there,
And all should cry, Beware! Beware!
His flashing eyes, his floating hair!
Weave a circle round him thrice,
And close your eyes with holy dread,
For he on honey-dew hath fed,
And drunk the milk of Paradise.


THE NEW COLOSSUS
Emma Lazarus, 1883

Not like the brazen giant of Greek fame,
With conquering limbs astride from land to land;
Here at our sea-washed, sunset gates shall stand
A mighty woman with a torch, whose flame
Is the imprisoned lightning, and her name
Mother of Exiles. From her beacon-hand
Glows world-wide welcome; her mild eyes command
The air-bridged harbor that twin cities frame.
"Keep, ancient lands, your storied pomp!" cries she
With silent lips. "Give me your tired, your poor,
Your huddled masses yearning to breathe free,
The wretched refuse of your teeming shore.
Send these, the homeless, tempest-tost to me,
I lift my lamp beside the golden door!"


O CAPTAIN! MY CAPTAIN!
Walt Whitman, 1865

O Captain! my Captain! our fearful trip is done,
The ship has weather'd every rack, the prize we sought is won,
The port is near, the bells I hear, the people all exulting,
While follow eyes the steady keel, the vessel grim and daring;
But O heart! heart! heart!
O the bleeding drops of red,
Where on the deck my Captain lies,
Fallen cold and dead.

O Captain! my Captain! rise up and hear the bells;
Rise up -- for you the flag is flung -- for you the bugle trills,
For you bouquets and ribbon'd wreaths -- for you the shores a-crowding,
For you they call, the swaying mass, their eager faces turning;
Here Captain! dear father!
This arm beneath your head!
It is some dream that on the deck,
You've fallen cold and dead.

My Captain does not answer, his lips are pale and still,
My father does not feel my arm, he has no pulse nor will,
The ship is anchor'd safe and sound, its voyage closed and done,
From fearful trip the victor ship comes in with object won;
Exult O shores, and ring O bells!
But I with mournful tread,
Walk the deck my Captain lies,
Fallen cold and dead.


CROSSING THE BAR
Alfred, Lord Tennyson, 1889

Sunset and evening star,
And one clear call for me!
And may there be no moaning of the bar,
When I put out to sea,

But such a tide as moving seems asleep,
Too full for sound and foam,
When that which drew from out the boundless deep
Turns again home.

Twilight and evening bell,
And after that the dark!
And may there be no sadness of farewell,
When I embark;

For tho' from out our bourne of Time and Place
The flood may bear me far,
I hope to see my Pilot face to face
When I have crost the bar.


THE CHARGE OF THE LIGHT BRIGADE
Alfred, Lord Tennyson, 1854

Half a league, half a league,
Half a league onward,
All in the valley of Death
Rode the six hundred.
"Forward, the Light Brigade!
Charge for the guns!" he said:
Into the valley of Death
Rode the six hundred.

"Forward, the Light Brigade!"
Was there a man dismay'd?
Not tho' the soldier knew
Some one had blunder'd:
Theirs not to make reply,
Theirs not to reason why,
Theirs but to do and die:
Into the valley of Death
Rode the six hundred.

Cannon to right of them,
Cannon to left of them,
Cannon in front of them
Volley'd and thunder'd;
Storm'd at with shot and shell,
Boldly they rode and well,
Into the jaws of Death,
Into the mouth of Hell
Rode the six hundred.

Flash'd all their sabres bare,
Flash'd as they turn'd in air
Sabring the gunners there,
Charging an army, while
All the world wonder'd:
Plunged in the battery-smoke
Right thro' the line they broke;
Cossack and Russian
Reel'd from the sabre-stroke
Shatter'd and sunder'd.
Then they rode back, but not
Not the six hundred.

Cannon to right of them,
Cannon to left of them,
Cannon behind them
Volley'd and thunder'd;
Storm'd at with shot and shell,
While horse and hero fell,
They that had fought so well
Came thro' the jaws of Death,
Back from the mouth of Hell,
All that was left of them,
Left of six hundred.

When can their glory fade?
O the wild charge they made!
All the world wonder'd.
Honour the charge they made!
Honour the Light Brigade,
Noble six hundred!


SEA FEVER
John Masefield, 1902

I must go down to the seas again, to the lonely sea and the sky,
And all I ask is a tall ship and a star to steer her by;
And the wheel's kick and the wind's song and the white sail's shaking,
And a grey mist on the sea's face, and a grey dawn breaking.

I must go down to the seas again, for the call of the running tide
Is a wild call and a clear call that may not be denied;
And all I ask is a windy day with the white clouds flying,
And the flung spray and the blown spume, and the sea-gulls crying.

I must go down to the seas again, to the vagrant gypsy life,
To the gull's way and the whale's way where the wind's like a whetted knife;
And all I ask is a merry yarn from a laughing fellow-rover,
And quiet sleep and a sweet dream when the long trick's over.


THE LAKE ISLE OF INNISFREE
William Butler Yeats, 1890

I will arise and go now, and go to Innisfree,
And a small cabin build there, of clay and wattles made;
Nine bean-rows will I have there, a hive for the honey-bee,
And live alone in the bee-loud glade.

And I shall have some peace there, for peace comes dropping slow,
Dropping from the veils of the morning to where the cricket sings;
There midnight's all a glimmer, and noon a purple glow,
And evening full of the linnet's wings.

I will arise and go now, for always night and day
I hear lake water lapping with low sounds by the shore;
While I stand on the roadway, or on the pavements grey,
I hear it in the deep heart's core.


HOW DO I LOVE THEE?
Elizabeth Barrett Browning, 1850

How do I love thee? Let me count the ways.
I love thee to the depth and breadth and height
My soul can reach, when feeling out of sight
For the ends of being and ideal grace.
I love thee to the level of every day's
Most quiet need, by sun and candle-light.
I love thee freely, as men strive for right.
I love thee purely, as they turn from praise.
I love thee with the passion put to use
In my old griefs, and with my childhood's faith.
I love thee with a love I seemed to lose
With my lost saints. I love thee with the breath,
Smiles, tears, of all my life; and, if God choose,
I shall but love thee better after death.


REMEMBER
Christina Rossetti, 1862

Remember me when I am gone away,
Gone far away into the silent land;
When you can no more hold me by the hand,
Nor I half turn to go yet turning stay.
Remember me when no more day by day
You tell me of our future that you plann'd:
Only remember me; you understand
It will be late to counsel then or pray.
Yet if you should forget me for a while
And afterwards remember, do not grieve:
For if the darkness and corruption leave
A vestige of the thoughts that once I had,
Better by far you should forget and smile
Than that you should remember and be sad.


A PSALM OF LIFE
Henry Wadsworth Longfellow, 1838

Tell me not, in mournful numbers,
Life is but an empty dream!
For the soul is dead that slumbers,
And things are not what they seem.

Life is real! Life is earnest!
And the grave is not its goal;
Dust thou art, to dust returnest,
Was not spoken of the soul.

Not enjoyment, and not sorrow,
Is our destined end or way;
But to act, that each to-morrow
Find us farther than to-day.

Art is long, and Time is fleeting,
And our hearts, though stout and brave,
Still, like muffled drums, are beating
Funeral marches to the grave.

In the world's broad field of battle,
In the bivouac of Life,
Be not like dumb, driven cattle!
Be a hero in the strife!

Trust no Future, howe'er pleasant!
Let the dead Past bury its dead!
Act, -- act in the living Present!
Heart within, and God o'erhead!

Lives of great men all remind us
We can make our lives sublime,
And, departing, leave behind us
Footprints on the sands of time;

Footprints, that perhaps another,
Sailing o'er life's solemn main,
A forlorn and shipwrecked brother,
Seeing, shall take heart again.

Let us, then, be up and doing,
With a heart for any fate;
Still achieving, still pursuing,
Learn to labor and to wait.


ABOU BEN ADHEM
Leigh Hunt, 1834

Abou Ben Adhem (may his tribe increase!)
Awoke one night from a deep dream of peace,
And saw, within the moonlight in his room,
Making it rich, and like a lily in bloom,
An angel writing in a book of gold: --
Exceeding peace had made Ben Adhem bold,
And to the presence in the room he said,
"What writest thou?" -- The vision raised its head,
And with a look made of all sweet accord,
Answered, "The names of those who love the Lord."
"And is mine one?" said Abou. "Nay, not so,"
Replied the angel. Abou spoke more low,
But cheerly still; and said, "I pray thee, then,
Write me as one that loves his fellow men."

The angel wrote, and vanished. The next night
It came again with a great wakening light,
And showed the names whom love of God had blest,
And lo! Ben Adhem's name led all the rest.


SHE WALKS IN BEAUTY
Lord Byron, 1814

She walks in beauty, like the night
Of cloudless climes and starry skies;
And all that's best of dark and bright
Meet in her aspect and her eyes:
Thus mellowed to that tender light
Which heaven to gaudy day denies.

One shade the more, one ray the less,
Had half impaired the nameless grace
Which waves in every raven tress,
Or softly lightens o'er her face;
Where thoughts serenely sweet express
How pure, how dear their dwelling-place.

And on that cheek, and o'er that brow,
So soft, so calm, yet eloquent,
The smiles that win, the tints that glow,
But tell of days in goodness spent,
A mind at peace with all below,
A heart whose love is innocent!


IN FLANDERS FIELDS
John McCrae, 1915

In Flanders fields the poppies blow
Between the crosses, row on row,
That mark our place; and in the sky
The larks, still bravely singing, fly
Scarce heard amid the guns below.

We are the Dead. Short days ago
We lived, felt dawn, saw sunset glow,
Loved and were loved, and now we lie
In Flanders fields.

Take up our quarrel with the foe:
To you from failing hands we throw
The torch; be yours to hold it high.
If ye break faith with us who die
We shall not sleep, though poppies grow
In Flanders fields.


THE OWL AND THE PUSSY-CAT
Edward Lear, 1871

The Owl and the Pussy-cat went to sea
In a beautiful pea-green boat,
They took some honey, and plenty of money,
Wrapped up in a five-pound note.
The Owl looked up to the stars above,
And sang to a small guitar,
"O lovely Pussy! O Pussy, my love,
What a beautiful Pussy you are,
You are,
You are!
What a beautiful Pussy you are!"

Pussy said to the Owl, "You elegant fowl!
How charmingly sweet you sing!
O let us be married! too long we have tarried:
But what shall we do for a ring?"
They sailed away, for a year and a day,
To the land where the Bong-Tree grows
And there in a wood a Piggy-wig stood
With a ring at the end of his nose,
His nose,
His nose,
With a ring at the end of his nose.

"Dear Pig, are you willing to sell for one shilling
Your ring?" Said the Piggy, "I will."
So they took it away, and were married next day
By the Turkey who lives on the hill.
They dined on mince, and slices of quince,
Which they ate with a runcible spoon;
And hand in hand, on the edge of the sand,
They danced by the light of the moon,
The moon,
The moon,
They danced by the light of the moon.


FROM THE KING JAMES BIBLE

Genesis, Chapter 1

In the beginning God created the heaven and the earth. And the earth was
without form, and void; and darkness was upon the face of the deep. And the
Spirit of God moved upon the face of the waters. And God said, Let there be
light: and there was light. And God saw the light, that it was good: and
God divided the light from the darkness. And God called the light Day, and
the darkness he called Night. And the evening and the morning were the
first day.

And God said, Let there be a firmament in the midst of the waters, and let
it divide the waters from the waters. And God made the firmament, and
divided the waters which were under the firmament from the waters which
were above the firmament: and it was so. And God called the firmament
Heaven. And the evening and the morning were the second day.

And God said, Let the waters under the heaven be gathered together unto one
place, and let the dry land appear: and it was so. And God called the dry
land Earth; and the gathering together of the waters called he Seas: and
God saw that it was good. And God said, Let the earth bring forth grass,
the herb yielding seed, and the fruit tree yielding fruit after his kind,
whose seed is in itself, upon the earth: and it was so. And the earth
brought forth grass, and herb yielding seed after his kind, and the tree
yielding fruit, whose seed was in itself, after his kind: and God saw that
it was good. And the evening and the morning were the third day.

And God said, Let there be lights in the firmament of the heaven to divide
the day from the night; and let them be for signs, and for seasons, and for
days, and years: And let them be for lights in the firmament of the heaven
to give light upon the earth: and it was so. And God made two great lights;
the greater light to rule the day, and the lesser light to rule the night:
he made the stars also. And God set them in the firmament of the heaven to
give light upon the earth, And to rule over the day and over the night, and
to divide the light from the darkness: and God saw that it was good. And
the evening and the morning were the fourth day.

And God said, Let the waters bring forth abundantly the moving creature
that hath life, and fowl that may fly above the earth in the open firmament
of heaven. And God created great whales, and every living creature that
moveth, which the waters brought forth abundantly, after their kind, and
every winged fowl after his kind: and God saw that it was good. And God
blessed them, saying, Be fruitful, and multiply, and fill the waters in the
seas, and let fowl multiply in the earth. And the evening and the morning
were the fifth day.

And God said, Let the earth bring forth the living creature after his kind,
cattle, and creeping thing, and beast of the earth after his kind: and it
was so. And God made the beast of the earth after his kind, and cattle
after their kind, and every thing that creepeth upon the earth after his
kind: and God saw that it was good. And God said, Let us make man in our
image, after our likeness: and let them have dominion over the fish of the
sea, and over the fowl of the air, and over the cattle, and over all the
earth, and over every creeping thing that creepeth upon the earth. So God
created man in his own image, in the image of God created he him; male and
female created he them. And God blessed them, and God said unto them, Be
fruitful, and multiply, and replenish the earth, and subdue it: and have
dominion over the fish of the sea, and over the fowl of the air, and over
every living thing that moveth upon the earth. And God saw every thing that
he had made, and, behold, it was very good. And the evening and the morning
were the sixth day.

Psalm 23

The Lord is my shepherd; I shall not want. He maketh me to lie down in
green pastures: he leadeth me beside the still waters. He restoreth my
soul: he leadeth me in the paths of righteousness for his name's sake. Yea,
though I walk through the valley of the shadow of death, I will fear no
evil: for thou art with me; thy rod and thy staff they comfort me. Thou
preparest a table before me in the presence of mine enemies: thou anointest
my head with oil; my cup runneth over. Surely goodness and mercy shall
follow me all the days of my life: and I will dwell in the house of the
Lord for ever.

Psalm 100

Make a joyful noise unto the Lord, all ye lands. Serve the Lord with
gladness: come before his presence with singing. Know ye that the Lord he
is God: it is he that hath made us, and not we ourselves; we are his
people, and the sheep of his pasture. Enter into his gates with
thanksgiving, and into his courts with praise: be thankful unto him, and
bless his name. For the Lord is good; his mercy is everlasting; and his
truth endureth to all generations.

Psalm 121

I will lift up mine eyes unto the hills, from whence cometh my help. My
help cometh from the Lord, which made heaven and earth. He will not suffer
thy foot to be moved: he that keepeth thee will not slumber. Behold, he
that keepeth Israel shall neither slumber nor sleep. The Lord is thy
keeper: the Lord is thy shade upon thy right hand. The sun shall not smite
thee by day, nor the moon by night. The Lord shall preserve thee from all
evil: he shall preserve thy soul. The Lord shall preserve thy going out and
thy coming in from this time forth, and even for evermore.

Ecclesiastes 3:1-8

To every thing there is a season, and a time to every purpose under the
heaven: A time to be born, and a time to die; a time to plant, and a time
to pluck up that which is planted; A time to kill, and a time to heal; a
time to break down, and a time to build up; A time to weep, and a time to
laugh; a time to mourn, and a time to dance; A time to cast away stones,
and a time to gather stones together; a time to embrace, and a time to
refrain from embracing; A time to get, and a time to lose; a time to keep,
and a time to cast away; A time to rend, and a time to sew; a time to keep
silence, and a time to speak; A time to love, and a time to hate; a time of
war, and a time of peace.

First Corinthians, Chapter 13

Though I speak with the tongues of men and of angels, and have not charity,
I am become as sounding brass, or a tinkling cymbal. And though I have the
gift of prophecy, and understand all mysteries, and all knowledge; and
though I have all faith, so that I could remove mountains, and have not
charity, I am nothing. And though I bestow all my goods to feed the poor,
and though I give my body to be burned, and have not charity, it profiteth
me nothing. Charity suffereth long, and is kind; charity envieth not;
charity vaunteth not itself, is not puffed up, Doth not behave itself
unseemly, seeketh not her own, is not easily provoked, thinketh no evil;
Rejoiceth not in iniquity, but rejoiceth in the truth; Beareth all things,
believeth all things, hopeth all things, endureth all things. Charity never
faileth: but whether there be prophecies, they shall fail; whether there be
tongues, they shall cease; whether there be knowledge, it shall vanish
away. For we know in part, and we prophesy in part. But when that which is
perfect is come, then that which is in part shall be done away. When I was
a child, I spake as a child, I understood as a child, I thought as a child:
but when I became a man, I put away childish things. For now we see through
a glass, darkly; but then face to face: now I know in part; but then shall
I know even as also I am known. And now abideth faith, hope, charity, these
three; but the greatest of these is charity.

The Beatitudes, from Matthew, Chapter 5

Blessed are the poor in spirit: for theirs is the kingdom of heaven.
Blessed are they that mourn: for they shall be comforted. Blessed are the
meek: for they shall inherit the earth. Blessed are they which do hunger
and thirst after righteousness: for they shall be filled. Blessed are the
merciful: for they shall obtain mercy. Blessed are the pure in heart: for
they shall see God. Blessed are the peacemakers: for they shall be called
the children of God. Blessed are they which are persecuted for
righteousness' sake: for theirs is the kingdom of heaven. Ye are the salt
of the earth: but if the salt have lost his savour, wherewith shall it be
salted? it is thenceforth good for nothing, but to be cast out, and to be
trodden under foot of men. Ye are the light of the world. A city that is
set on an hill cannot be hid. Neither do men light a candle, and put it
under a bushel, but on a candlestick; and it giveth light unto all that are
in the house. Let your light so shine before men, that they may see your
good works, and glorify your Father which is in heaven.


OPENINGS OF CLASSIC NOVELS

From Pride and Prejudice, by Jane Austen, 1813

It is a truth universally acknowledged, that a single man in possession of
a good fortune, must be in want of a wife.

However little known the feelings or views of such a man may be on his
first entering a neighbourhood, this truth is so well fixed in the minds of
the surrounding families, that he is considered as the rightful property of
some one or other of their daughters.

"My dear Mr. Bennet," said his lady to him one day, "have you heard that
Netherfield Park is let at last?"

Mr. Bennet replied that he had not.

"But it is," returned she; "for Mrs. Long has just been here, and she told
me all about it."

Mr. Bennet made no answer.

"Do you not want to know who has taken it?" cried his wife impatiently.

"You want to tell me, and I have no objection to hearing it."

This was invitation enough.

From A Tale of Two Cities, by Charles Dickens, 1859

It was the best of times, it was the worst of times, it was the age of
wisdom, it was the age of foolishness, it was the epoch of belief, it was
the epoch of incredulity, it was the season of Light, it was the season of
Darkness, it was the spring of hope, it was the winter of despair, we had
everything before us, we had nothing before us, we were all going direct to
Heaven, we were all going direct the other way -- in short, the period was
so far like the present period, that some of its noisiest authorities
insisted on its being received, for good or for evil, in the superlative
degree of comparison only.

There were a king with a large jaw and a queen with a plain face, on the
throne of England; there were a king with a large jaw and a queen with a
fair face, on the throne of France. In both countries it was clearer than
crystal to the lords of the State preserves of loaves and fishes, that
things in general were settled for ever.

From Moby-Dick, by Herman Melville, 1851

Call me Ishmael. Some years ago -- never mind how long precisely -- having
little or no money in my purse, and nothing particular to interest me on
shore, I thought I would sail about a little and see the watery part of the
world. It is a way I have of driving off the spleen, and regulating the
circulation. Whenever I find myself growing grim about the mouth; whenever
it is a damp, drizzly November in my soul; whenever I find myself
involuntarily pausing before coffin warehouses, and bringing up the rear of
every funeral I meet; and especially whenever my hypos get such an upper
hand of me, that it requires a strong moral principle to prevent me from
deliberately stepping into the street, and methodically knocking people's
hats off -- then, I account it high time to get to sea as soon as I can.
This is my substitute for pistol and ball. With a philosophical flourish
Cato throws himself upon his sword; I quietly take to the ship. There is
nothing surprising in this. If they but knew it, almost all men in their
degree, some time or other, cherish very nearly the same feelings towards
the ocean with me.

From Alice's Adventures in Wonderland, by Lewis Carroll, 1865

Alice was beginning to get very tired of sitting by her sister on the bank,
and of having nothing to do: once or twice she had peeped into the book her
sister was reading, but it had no pictures or conversations in it, "and
what is the use of a book," thought Alice, "without pictures or
conversations?"

So she was considering in her own mind (as well as she could, for the hot
day made her feel very sleepy and stupid), whether the pleasure of making a
daisy-chain would be worth the trouble of getting up and picking the
daisies, when suddenly a White Rabbit with pink eyes ran close by her.

There was nothing so very remarkable in that; nor did Alice think it so
very much out of the way to hear the Rabbit say to itself, "Oh dear! Oh
dear! I shall be late!" (when she thought it over afterwards, it occurred
to her that she ought to have wondered at this, but at the time it all
seemed quite natural); but when the Rabbit actually took a watch out of its
waistcoat-pocket, and looked at it, and then hurried on, Alice started to
her feet, for it flashed across her mind that she had never before seen a
rabbit with either a waistcoat-pocket, or a watch to take out of it, and
burning with curiosity, she ran across the field after it, and fortunately
was just in time to see it pop down a large rabbit-hole under the hedge.

From A Christmas Carol, by Charles Dickens, 1843

Marley was dead: to begin with. There is no doubt whatever about that. The
register of his burial was signed by the clergyman, the clerk, the
undertaker, and the chief mourner. Scrooge signed it: and Scrooge's name
was good upon 'Change, for anything he chose to put his hand to. Old Marley
was as dead as a door-nail.

Mind! I don't mean to say that I know, of my own knowledge, what there is
particularly dead about a door-nail. I might have been inclined, myself, to
regard a coffin-nail as the deadest piece of ironmongery in the trade. But
the wisdom of our ancestors is in the simile; and my unhallowed hands shall
not disturb it, or the Country's done for. You will therefore permit me to
repeat, emphatically, that Marley was as dead as a door-nail.

Scrooge knew he was dead? Of course he did. How could it be otherwise?
Scrooge and he were partners for I don't know how many years. Scrooge was
his sole executor, his sole administrator, his sole assign, his sole
residuary legatee, his sole friend, and sole mourner. And even Scrooge was
not so dreadfully cut up by the sad event, but that he was an excellent man
of business on the very day of the funeral, and solemnised it with an
undoubted bargain.


FABLES OF AESOP, RETOLD

The Tortoise and the Hare

A hare was forever boasting of his speed to the other animals. "I have
never yet been beaten," said he, "when I put forth my full speed. I
challenge any one here to race with me." The tortoise said quietly, "I
accept your challenge." "That is a good joke," said the hare; "I could
dance round you all the way." "Keep your boasting till you have beaten me,"
answered the tortoise. "Shall we race?" So a course was fixed and a start
was made. The hare darted almost out of sight at once, but soon stopped
and, to show his contempt for the tortoise, lay down to have a nap. The
tortoise plodded on and plodded on, and when the hare awoke from his nap,
he saw the tortoise just near the winning-post and could not run up in time
to save the race. Then said the tortoise: slow and steady wins the race.

The Fox and the Grapes

One hot summer's day a fox was strolling through an orchard till he came to
a bunch of grapes just ripening on a vine which had been trained over a
lofty branch. "Just the thing to quench my thirst," quoth he. Drawing back
a few paces, he took a run and a jump, and just missed the bunch. Turning
round again with a one, two, three, he jumped up, but with no greater
success. Again and again he tried after the tempting morsel, but at last
had to give it up, and walked away with his nose in the air, saying: "I am
sure they are sour." It is easy to despise what you cannot get.

The Boy Who Cried Wolf

There was once a young shepherd boy who tended his sheep at the foot of a
mountain near a dark forest. It was rather lonely for him all day, so he
thought upon a plan by which he could get a little company and some
excitement. He rushed down towards the village calling out "Wolf, Wolf,"
and the villagers came out to meet him, and some of them stopped with him
for a considerable time. This pleased the boy so much that a few days
afterwards he tried the same trick, and again the villagers came to his
help. But shortly after this a wolf actually did come out from the forest,
and began to worry the sheep, and the boy of course cried out "Wolf, Wolf,"
still louder than before. But this time the villagers, who had been fooled
twice before, thought the boy was again deceiving them, and nobody stirred
to come to his help. So the wolf made a good meal off the boy's flock, and
when the boy complained, the wise man of the village said: a liar will not
be believed, even when he speaks the truth.

The North Wind and the Sun

The North Wind and the Sun disputed as to which was the most powerful, and
agreed that he should be declared the victor who could first strip a
wayfaring man of his clothes. The North Wind first tried his power and blew
with all his might, but the keener his blasts, the closer the traveller
wrapped his cloak around him, until at last, resigning all hope of victory,
the Wind called upon the Sun to see what he could do. The Sun suddenly
shone out with all his warmth. The traveller no sooner felt his genial rays
than he took off one garment after another, and at last, fairly overcome
with heat, undressed and bathed in a stream that lay in his path.
Persuasion is better than force.

The Ant and the Grasshopper

In a field one summer's day a grasshopper was hopping about, chirping and
singing to its heart's content. An ant passed by, bearing along with great
toil an ear of corn he was taking to the nest. "Why not come and chat with
me," said the grasshopper, "instead of toiling and moiling in that way?"
"I am helping to lay in food for the winter," said the ant, "and recommend
you to do the same." "Why bother about winter?" said the grasshopper; "we
have got plenty of food at present." But the ant went on its way and
continued its toil. When the winter came the grasshopper had no food, and
found itself dying of hunger, while it saw the ants distributing every day
corn and grain from the stores they had collected in the summer. Then the
grasshopper knew: it is best to prepare for the days of necessity.

The Lion and the Mouse

Once when a lion was asleep a little mouse began running up and down upon
him; this soon wakened the lion, who placed his huge paw upon him, and
opened his big jaws to swallow him. "Pardon, O King," cried the little
mouse: "forgive me this time, I shall never forget it: who knows but what I
may be able to do you a turn some of these days?" The lion was so tickled
at the idea of the mouse being able to help him, that he lifted up his paw
and let him go. Some time after the lion was caught in a trap, and the
hunters, who desired to carry him alive to the King, tied him to a tree
while they went in search of a waggon to carry him on. Just then the little
mouse happened to pass by, and seeing the sad plight in which the lion was,
went up to him and soon gnawed away the ropes that bound the King of the
Beasts. "Was I not right?" said the little mouse. Little friends may prove
great friends.

The Crow and the Pitcher

A crow, half-dead with thirst, came upon a pitcher which had once been full
of water; but when the crow put its beak into the mouth of the pitcher he
found that only very little water was left in it, and that he could not
reach far enough down to get at it. He tried, and he tried, but at last had
to give up in despair. Then a thought came to him, and he took a pebble and
dropped it into the pitcher. Then he took another pebble and dropped it
into the pitcher. At last, at last, he saw the water mount up near him, and
after casting in a few more pebbles he was able to quench his thirst and
save his life. Little by little does the trick.

The Dog and the Shadow

It happened that a dog had got a piece of meat and was carrying it home in
his mouth to eat it in peace. Now on his way home he had to cross a plank
lying across a running brook. As he crossed, he looked down and saw his own
shadow reflected in the water beneath. Thinking it was another dog with
another piece of meat, he made up his mind to have that also. So he made a
snap at the shadow in the water, but as he opened his mouth the piece of
meat fell out, dropped into the water and was never seen more. Beware lest
you lose the substance by grasping at the shadow.


DOVER BEACH
Matthew Arnold, 1867

The sea is calm to-night.
The tide is full, the moon lies fair
Upon the straits; on the French coast the light
Gleams and is gone; the cliffs of England stand,
Glimmering and vast, out in the tranquil bay.
Come to the window, sweet is the night-air!
Only, from the long line of spray
Where the sea meets the moon-blanched land,
Listen! you hear the grating roar
Of pebbles which the waves draw back, and fling,
At their return, up the high strand,
Begin, and cease, and then again begin,
With tremulous cadence slow, and bring
The eternal note of sadness in.

Sophocles long ago
Heard it on the Aegean, and it brought
Into his mind the turbid ebb and flow
Of human misery; we
Find also in the sound a thought,
Hearing it by this distant northern sea.

The Sea of Faith
Was once, too, at the full, and round earth's shore
Lay like the folds of a bright girdle furled.
But now I only hear
Its melancholy, long, withdrawing roar,
Retreating, to the breath
Of the night-wind, down the vast edges drear
And naked shingles of the world.

Ah, love, let us be true
To one another! for the world, which seems
To lie before us like a land of dreams,
So various, so beautiful, so new,
Hath really neither joy, nor love, nor light,
Nor certitude, nor peace, nor help for pain;
And we are here as on a darkling plain
Swept with confused alarms of struggle and flight,
Where ignorant armies clash by night.


THE SECOND COMING
William Butler Yeats, 1920

Turning and turning in the widening gyre
The falcon cannot hear the falconer;
Things fall apart; the centre cannot hold;
Mere anarchy is loosed upon the world,
The blood-dimmed tide is loosed, and everywhere
The ceremony of innocence is drowned;
The best lack all conviction, while the worst
Are full of passionate intensity.

Surely some revelation is at hand;
Surely the Second Coming is at hand.
The Second Coming! Hardly are those words out
When a vast image out of Spiritus Mundi
Troubles my sight: somewhere in sands of the desert
A shape with lion body and the head of a man,
A gaze blank and pitiless as the sun,
Is moving its slow thighs, while all about it
Reel shadows of the indignant desert birds.
The darkness drops again; but now I know
That twenty centuries of stony sleep
Were vexed to nightmare by a rocking cradle,
And what rough beast, its hour come round at last,
Slouches towards Bethlehem to be born?


WHEN YOU ARE OLD
William Butler Yeats, 1893

When you are old and grey and full of sleep,
And nodding by the fire, take down this book,
And slowly read, and dream of the soft look
Your eyes had once, and of their shadows deep;

How many loved your moments of glad grace,
And loved your beauty with love false or true,
But one man loved the pilgrim soul in you,
And loved the sorrows of your changing face;

And bending down beside the glowing bars,
Murmur, a little sadly, how Love fled
And paced upon the mountains overhead
And hid his face amid a crowd of stars.


CASEY AT THE BAT
Ernest Lawrence Thayer, 1888

The outlook wasn't brilliant for the Mudville nine that day;
The score stood four to two with but one inning more to play.
And then when Cooney died at first, and Barrows did the same,
A sickly silence fell upon the patrons of the game.

A straggling few got up to go in deep despair. The rest
Clung to that hope which springs eternal in the human breast;
They thought if only Casey could but get a whack at that --
We'd put up even money now with Casey at the bat.

But Flynn preceded Casey, as did also Jimmy Blake,
And the former was a lulu and the latter was a cake;
So upon that stricken multitude grim melancholy sat,
For there seemed but little chance of Casey's getting to the bat.

But Flynn let drive a single, to the wonderment of all,
And Blake, the much despised, tore the cover off the ball;
And when the dust had lifted, and the men saw what had occurred,
There was Jimmy safe at second and Flynn a-hugging third.

Then from five thousand throats and more there rose a lusty yell;
It rumbled through the valley, it rattled in the dell;
It knocked upon the mountain and recoiled upon the flat,
For Casey, mighty Casey, was advancing to the bat.

There was ease in Casey's manner as he stepped into his place;
There was pride in Casey's bearing and a smile on Casey's face.
And when, responding to the cheers, he lightly doffed his hat,
No stranger in the crowd could doubt 'twas Casey at the bat.

Ten thousand eyes were on him as he rubbed his hands with dirt;
Five thousand tongues applauded when he wiped them on his shirt.
Then while the writhing pitcher ground the ball into his hip,
Defiance gleamed in Casey's eye, a sneer curled Casey's lip.

And now the leather-covered sphere came hurtling through the air,
And Casey stood a-watching it in haughty grandeur there.
Close by the sturdy batsman the ball unheeded sped --
"That ain't my style," said Casey. "Strike one," the umpire said.

From the benches, black with people, there went up a muffled roar,
Like the beating of the storm-waves on a stern and distant shore.
"Kill him! Kill the umpire!" shouted someone on the stand;
And it's likely they'd have killed him had not Casey raised his hand.

With a smile of Christian charity great Casey's visage shone;
He stilled the rising tumult; he bade the game go on;
He signaled to the pitcher, and once more the spheroid flew;
But Casey still ignored it, and the umpire said, "Strike two."

"Fraud!" cried the maddened thousands, and echo answered fraud;
But one scornful look from Casey and the audience was awed.
They saw his face grow stern and cold, they saw his muscles strain,
And they knew that Casey wouldn't let that ball go by again.

The sneer is gone from Casey's lip, his teeth are clinched in hate;
He pounds with cruel violence his bat upon the plate.
And now the pitcher holds the ball, and now he lets it go,
And now the air is shattered by the force of Casey's blow.

Oh, somewhere in this favored land the sun is shining bright;
The band is playing somewhere, and somewhere hearts are light,
And somewhere men are laughing, and somewhere children shout;
But there is no joy in Mudville -- mighty Casey has struck out.


TO AUTUMN
John Keats, 1819

Season of mists and mellow fruitfulness,
Close bosom-friend of the maturing sun;
Conspiring with him how to load and bless
With fruit the vines that round the thatch-eves run;
To bend with apples the moss'd cottage-trees,
And fill all fruit with ripeness to the core;
To swell the gourd, and plump the hazel shells
With a sweet kernel; to set budding more,
And still more, later flowers for the bees,
Until they think warm days will never cease,
For Summer has o'er-brimm'd their clammy cells.

Who hath not seen thee oft amid thy store?
Sometimes whoever seeks abroad may find
Thee sitting careless on a granary floor,
Thy hair soft-lifted by the winnowing wind;
Or on a half-reap'd furrow sound asleep,
Drows'd with the fume of poppies, while thy hook
Spares the next swath and all its twined flowers:
And sometimes like a gleaner thou dost keep
Steady thy laden head across a brook;
Or by a cyder-press, with patient look,
Thou watchest the last oozings hours by hours.

Where are the songs of Spring? Ay, where are they?
Think not of them, thou hast thy music too, --
While barred clouds bloom the soft-dying day,
And touch the stubble-plains with rosy hue;
Then in a wailful choir the small gnats mourn
Among the river sallows, borne aloft
Or sinking as the light wind lives or dies;
And full-grown lambs loud bleat from hilly bourn;
Hedge-crickets sing; and now with treble soft
The red-breast whistles from a garden-croft;
And gathering swallows twitter in the skies.


FROM WALDEN
Henry David Thoreau, 1854

I went to the woods because I wished to live deliberately, to front only
the essential facts of life, and see if I could not learn what it had to
teach, and not, when I came to die, discover that I had not lived. I did
not wish to live what was not life, living is so dear; nor did I wish to
practise resignation, unless it was quite necessary. I wanted to live deep
and suck out all the marrow of life, to live so sturdily and Spartan-like
as to put to rout all that was not life, to cut a broad swath and shave
close, to drive life into a corner, and reduce it to its lowest terms, and,
if it proved to be mean, why then to get the whole and genuine meanness of
it, and publish its meanness to the world; or if it were sublime, to know
it by experience, and be able to give a true account of it in my next
excursion.


FROM SELF-RELIANCE
Ralph Waldo Emerson, 1841

There is a time in every man's education when he arrives at the conviction
that envy is ignorance; that imitation is suicide; that he must take
himself for better, for worse, as his portion; that though the wide
universe is full of good, no kernel of nourishing corn can come to him but
through his toil bestowed on that plot of ground which is given to him to
till. The power which resides in him is new in nature, and none but he
knows what that is which he can do, nor does he know until he has tried.

Trust thyself: every heart vibrates to that iron string. Accept the place
the divine providence has found for you, the society of your
contemporaries, the connection of events. Great men have always done so,
and confided themselves childlike to the genius of their age, betraying
their perception that the absolutely trustworthy was seated at their heart,
working through their hands, predominating in all their being.


PATRICK HENRY, TO THE VIRGINIA CONVENTION
March 23, 1775

It is in vain, sir, to extenuate the matter. Gentlemen may cry, Peace,
Peace -- but there is no peace. The war is actually begun! The next gale
that sweeps from the north will bring to our ears the clash of resounding
arms! Our brethren are already in the field! Why stand we here idle? What
is it that gentlemen wish? What would they have? Is life so dear, or peace
so sweet, as to be purchased at the price of chains and slavery? Forbid it,
Almighty God! I know not what course others may take; but as for me, give
me liberty or give me death!


FRANKLIN D. ROOSEVELT, FIRST INAUGURAL ADDRESS
March 4, 1933

This is preeminently the time to speak the truth, the whole truth, frankly
and boldly. Nor need we shrink from honestly facing conditions in our
country today. This great Nation will endure as it has endured, will revive
and will prosper. So, first of all, let me assert my firm belief that the
only thing we have to fear is fear itself -- nameless, unreasoning,
unjustified terror which paralyzes needed efforts to convert retreat into
advance. In every dark hour of our national life a leadership of frankness
and vigor has met with that understanding and support of the people
themselves which is essential to victory.


JOHN F. KENNEDY, INAUGURAL ADDRESS
January 20, 1961

We observe today not a victory of party, but a celebration of freedom --
symbolizing an end, as well as a beginning -- signifying renewal, as well
as change. Let the word go forth from this time and place, to friend and
foe alike, that the torch has been passed to a new generation of Americans
-- born in this century, tempered by war, disciplined by a hard and bitter
peace, proud of our ancient heritage. And so, my fellow Americans: ask not
what your country can do for you -- ask what you can do for your country.
My fellow citizens of the world: ask not what America will do for you, but
what together we can do for the freedom of man.


SONNET: ON HIS BLINDNESS
John Milton, 1655

When I consider how my light is spent,
Ere half my days, in this dark world and wide,
And that one talent which is death to hide
Lodged with me useless, though my soul more bent
To serve therewith my Maker, and present
My true account, lest He returning chide;
"Doth God exact day-labour, light denied?"
I fondly ask. But Patience, to prevent
That murmur, soon replies, "God doth not need
Either man's work or his own gifts. Who best
Bear his mild yoke, they serve him best. His state
Is kingly: thousands at his bidding speed,
And post o'er land and ocean without rest;
They also serve who only stand and wait."


DEATH, BE NOT PROUD
John Donne, 1633

Death, be not proud, though some have called thee
Mighty and dreadful, for thou art not so;
For those whom thou think'st thou dost overthrow
Die not, poor Death, nor yet canst thou kill me.
From rest and sleep, which but thy pictures be,
Much pleasure; then from thee much more must flow,
And soonest our best men with thee do go,
Rest of their bones, and soul's delivery.
Thou art slave to fate, chance, kings, and desperate men,
And dost with poison, war, and sickness dwell,
And poppy or charms can make us sleep as well
And better than thy stroke; why swell'st thou then?
One short sleep past, we wake eternally
And death shall be no more; Death, thou shalt die.


NO MAN IS AN ISLAND
John Donne, 1624

No man is an island, entire of itself; every man is a piece of the
continent, a part of the main. If a clod be washed away by the sea, Europe
is the less, as well as if a promontory were, as well as if a manor of thy
friend's or of thine own were: any man's death diminishes me, because I am
involved in mankind, and therefore never send to know for whom the bell
tolls; it tolls for thee.


THE ARROW AND THE SONG
Henry Wadsworth Longfellow, 1845

I shot an arrow into the air,
It fell to earth, I knew not where;
For, so swiftly it flew, the sight
Could not follow it in its flight.

I breathed a song into the air,
It fell to earth, I knew not where;
For who has sight so keen and strong,
That it can follow the flight of song?

Long, long afterward, in an oak
I found the arrow, still unbroke;
And the song, from beginning to end,
I found again in the heart of a friend.


HOPE IS THE THING WITH FEATHERS
Emily Dickinson, published 1891

Hope is the thing with feathers
That perches in the soul,
And sings the tune without the words,
And never stops at all,

And sweetest in the gale is heard;
And sore must be the storm
That could abash the little bird
That kept so many warm.

I've heard it in the chillest land,
And on the strangest sea;
Yet, never, in extremity,
It asked a crumb of me.


BECAUSE I COULD NOT STOP FOR DEATH
Emily Dickinson, published 1890

Because I could not stop for Death,
He kindly stopped for me;
The carriage held but just ourselves
And Immortality.

We slowly drove, he knew no haste,
And I had put away
My labor, and my leisure too,
For his civility.

We passed the school, where children strove
At recess, in the ring;
We passed the fields of gazing grain,
We passed the setting sun.

Or rather, he passed us;
The dews grew quivering and chill,
For only gossamer my gown,
My tippet only tulle.

We paused before a house that seemed
A swelling of the ground;
The roof was scarcely visible,
The cornice but a mound.

Since then 'tis centuries; but each
Feels shorter than the day
I first surmised the horses' heads
Were toward eternity.
)ANTHOLOGY";

}  // namespace

const std::string& charlm_corpus() {
  static const std::string corpus(kCorpus);
  return corpus;
}

}  // namespace steplab
